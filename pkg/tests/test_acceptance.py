"""Acceptance suite.

Every test prints exactly one ``[ACCEPT] <id> PASS|FAIL ...`` line (with
capture disabled, so it shows up in plain ``pytest -v`` logs) and then
asserts the same verdict.  Reference numbers are written out literally here
so the check does not depend on the bundled CSV fixtures.
"""
import math

import numpy as np
import pytest

from epnu.config import load_molecule
from epnu.errors import NonPhysicalError
from epnu.nu_core import NUProblem, derive, energy_residual
from epnu.oracle import validate
from epnu.spectrum import energy_level, n_max, nu_problem, s_wave_energy, transitions
from epnu.tables import table4
from epnu.wavefunction import (count_nodes, make_wavefunction, normalize_quadrature,
                               normalize_series, overlap)

H2_GROUND = {"h2_row1.cfg": 2168.68, "h2_row2.cfg": 2164.45,
             "h2_row3.cfg": 2157.53, "h2_row4.cfg": 2147.53}
AR2_SPACINGS = [25.808, 46.079, 61.472, 72.536, 79.733, 83.453, 84.026]
AR2_LEVELS = {  # (n, l): cm^-1; (2, 2) has no printed value
    (0, 0): 15.3828, (1, 0): 41.1910, (1, 1): 25.7584, (2, 0): 61.4619, (2, 1): 49.7874,
    (3, 0): 76.8546, (3, 1): 68.3028, (3, 2): 19.9133, (4, 0): 87.9188, (4, 1): 82.0041,
    (4, 2): 46.4777, (5, 0): 95.1159, (5, 1): 91.4672, (5, 2): 66.5474,
}


@pytest.fixture
def verdict(capsys):
    def emit(cid, ok, detail):
        with capsys.disabled():
            print(f"\n[ACCEPT] {cid} {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, f"{cid}: {detail}"
    return emit


def test_c1_h2_ground_states(verdict):
    worst = 0.0
    for cfg, ref in H2_GROUND.items():
        worst = max(worst, abs(energy_level(load_molecule(cfg), 0, 0).energy - ref))
    verdict("C1 H2 ground states (4 rows)", worst <= 0.05,
            f"max |dev| = {worst:.4g} cm^-1 (tol 0.05)")


def test_c2_ar2_vibrational_spacings(verdict):
    m = load_molecule("ar2.cfg")
    gated = False
    try:
        transitions(m, [7])
    except NonPhysicalError:
        gated = True
    flagged = [n for n in range(1, 8) if not energy_level(m, n, 0).physical]
    spacings = transitions(m, range(1, 8), allow_unphysical=True)
    worst = max(abs(a - b) for a, b in zip(spacings, AR2_SPACINGS))
    ok = worst <= 0.05 and gated and flagged == [7]
    verdict("C2 Ar2 spacings n=1..7", ok,
            f"max |dev| = {worst:.4g} cm^-1 (tol 0.05); n=7 gated={gated}; "
            f"flagged unphysical={flagged}")


def test_c3_rovibrational_grid(verdict):
    rows = table4()
    ar2 = load_molecule("ar2.cfg")
    worst_ar2 = max(abs(energy_level(ar2, n, l).energy - ref) for (n, l), ref in AR2_LEVELS.items())
    worst_fixture = {name: max(r.abs_dev for r in rows if r.molecule == name and r.abs_dev is not None)
                     for name in ("Ar2", "H2")}
    absent = [r for r in rows if r.molecule == "Ar2" and (r.n, r.l) == (2, 2)]
    absent_ok = (len(absent) == 1 and absent[0].status == "absent" and absent[0].computed is None
                 and not energy_level(ar2, 2, 2).physical)
    failed = [r for r in rows if r.failed]
    ok = (worst_ar2 <= 0.05 and worst_fixture["Ar2"] <= 0.05 and worst_fixture["H2"] <= 0.5
          and absent_ok and not failed)
    verdict("C3 rovibrational grid", ok,
            f"Ar2 max |dev| = {max(worst_ar2, worst_fixture['Ar2']):.3g} (tol 0.05); "
            f"H2 max |dev| = {worst_fixture['H2']:.3g} (tol 0.5); Ar2 (2,2) absent={absent_ok}")


def test_c4_highest_vibrational_level(verdict):
    value, floor = n_max(load_molecule("ar2.cfg"))
    verdict("C4 Ar2 n_max", 6.5 <= value <= 6.9 and floor == 6,
            f"n_max = {value:.6f}, floor = {floor}")


@pytest.mark.slow
def test_c5_oracle_equivalence(verdict):
    worst_ratio = 0.0
    checked = 0
    problems = []
    for cfg in ("ar2.cfg", "h2_row1.cfg"):
        m = load_molecule(cfg)
        for l in range(3):
            for n in range(4):
                if not energy_level(m, n, l).physical:
                    continue
                v = validate(m, n, l, tol=1e-9)
                tol = max(1e-3, 1e-8 * abs(v.E_closed))
                devs = [v.closed_vs_approx]
                if l == 0:
                    devs.append(v.closed_vs_exact)
                if not (v.approx.converged and v.exact.converged):
                    problems.append(f"{m.name}({n},{l}) not converged")
                worst_ratio = max(worst_ratio, max(devs) / tol)
                checked += 1
    ok = worst_ratio <= 1.0 and not problems and checked > 0
    verdict("C5 oracle equivalence", ok,
            f"{checked} states; worst dev/tol = {worst_ratio:.3g}" + (f"; {problems}" if problems else ""))


@pytest.mark.slow
def test_c6_approximation_error_report(verdict):
    lines = []
    s_wave_worst = 0.0
    produced = 0
    for cfg in ("ar2.cfg", "h2_row1.cfg"):
        m = load_molecule(cfg)
        for l in range(3):
            for n in range(4):
                if not energy_level(m, n, l).physical:
                    continue
                v = validate(m, n, l, tol=1e-9)
                err = v.closed_vs_exact
                lines.append(f"{m.name:>3} n={n} l={l} |E_closed - E_exact| = {err:.6g} cm^-1")
                if l == 0:
                    s_wave_worst = max(s_wave_worst, err)
                else:
                    produced += math.isfinite(err)
    print("\n".join(lines))
    ok = produced > 0 and s_wave_worst <= 1e-3
    verdict("C6 approximation-error report", ok,
            f"{produced} l>0 entries reported; worst l=0 entry = {s_wave_worst:.3g} cm^-1")


def test_c7_wavefunction_suite(verdict):
    m = load_molecule("ar2.cfg")
    issues = []
    norm_worst = series_worst = ortho_worst = 0.0
    for l in range(3):
        wfs = []
        for n in range(7):
            e = energy_level(m, n, l)
            if not e.physical:
                continue
            if not (e.K > 0 and derive(nu_problem(e)).tau_prime < 0):
                issues.append(f"({n},{l}) sign conditions")
            wf = make_wavefunction(m, e)
            norm_worst = max(norm_worst, abs(overlap(wf, wf) - 1.0))
            if count_nodes(wf) != n:
                issues.append(f"({n},{l}) nodes={count_nodes(wf)}")
            if l == 0 and n <= 3:
                a, b = normalize_quadrature(m, e), normalize_series(m, e)
                series_worst = max(series_worst, abs(a - b) / abs(a))
            wfs.append(wf)
        for i in range(len(wfs)):
            for j in range(i):
                ortho_worst = max(ortho_worst, abs(overlap(wfs[i], wfs[j])))
    h2 = load_molecule("h2_row1.cfg")
    for n in range(4):
        e = energy_level(h2, n, 0)
        wf = make_wavefunction(h2, e)
        norm_worst = max(norm_worst, abs(overlap(wf, wf) - 1.0))
        if count_nodes(wf) != n or derive(nu_problem(e)).tau_prime >= 0:
            issues.append(f"H2({n},0)")
    ok = norm_worst <= 1e-8 and series_worst <= 1e-6 and ortho_worst < 1e-6 and not issues
    verdict("C7 wavefunction suite", ok,
            f"norm {norm_worst:.2g} (tol 1e-8); series vs quad {series_worst:.2g} (tol 1e-6); "
            f"orthogonality {ortho_worst:.2g} (tol 1e-6)" + (f"; {issues}" if issues else ""))


def test_c8_nu_engine(verdict):
    issues = []
    for cfg in ("ar2.cfg", "h2_row1.cfg"):
        m = load_molecule(cfg)
        for n, l in [(0, 0), (2, 1), (3, 2)]:
            e = energy_level(m, n, l)
            p = nu_problem(e)
            s = derive(p)
            if (p.c1, p.c2, p.c3, s.c4, s.c5) != (1.0, 1.0, 1.0, 0.0, -0.5) or s.c8 != e.K**2:
                issues.append(f"{m.name}({n},{l}) constants")
            if abs(s.c9 - e.S**2) > 1e-12 * e.S**2:
                issues.append(f"{m.name}({n},{l}) c9")
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(1000):
        K, S = rng.uniform(0.01, 300.0), rng.uniform(0.5, 300.0)
        n = int(rng.integers(0, 25))
        nu = n + 0.5 + S
        # Q that makes (K, S, n) solve the closed-form energy equation
        Q = S * S - 0.25 - nu * nu - 2.0 * K * nu
        p = NUProblem(1.0, 1.0, 1.0, K * K + S * S - Q - 0.25, 2 * K * K - Q, K * K)
        worst = max(worst, abs(energy_residual(n, p)) / (K * K + S * S + abs(Q) + nu * nu))
    ok = worst <= 1e-12 and not issues
    verdict("C8 NU engine", ok,
            f"specialization constants {'exact' if not issues else issues}; "
            f"1000-draw worst scaled residual = {worst:.2g} (tol 1e-12)")
