"""Command-line front end.

    epnu --config ar2.cfg --task spectrum --n 0..5 --l 0..2
    epnu --task tables --allow-unphysical --out tables.csv

Exit codes: 0 success, 1 usage error, 2 numeric failure,
3 a value outside its acceptance tolerance.
"""
import argparse
import csv
import io
import sys

import numpy as np

from . import tables
from .config import TASKS, ConfigError, load_config
from .errors import ConvergenceError, NoBoundStateError, NonPhysicalError
from .oracle import DEFAULT_POINTS, validate
from .spectrum import energy_level
from .wavefunction import make_wavefunction

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_TOLERANCE = 0, 1, 2, 3
DEFAULT_SAMPLES = 401
DEFAULT_VALIDATE_TOL = 1e-3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text):
    """'LO..HI' or a single integer, inclusive."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None


def build_parser():
    p = _Parser(prog="epnu", description="Ro-vibrational levels of hyperbolical potentials.")
    p.add_argument("--config", help="molecule config file (bundled names such as ar2.cfg work too)")
    p.add_argument("--task", choices=TASKS, default="spectrum")
    p.add_argument("--n", type=parse_range, default=(0, 5), metavar="LO..HI")
    p.add_argument("--l", type=parse_range, default=(0, 2), metavar="LO..HI")
    p.add_argument("--allow-unphysical", action="store_true",
                   help="also evaluate levels that are not normalizable bound states")
    p.add_argument("--out", help="output CSV path (default: stdout)")
    p.add_argument("--grid-points", type=int,
                   help=f"oracle grid points (validate, default {DEFAULT_POINTS}) "
                        f"or samples per state (wavefunction, default {DEFAULT_SAMPLES})")
    p.add_argument("--tolerance", type=float,
                   help="acceptance tolerance in cm^-1 for the validate task "
                        f"(default max({DEFAULT_VALIDATE_TOL:g}, 1e-8 |E|))")
    return p


def _f(x):
    return format(x, ".10g")


def _csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def run_spectrum(cfg):
    m = cfg.molecule
    rows = []
    for n in cfg.n_values:
        for l in cfg.l_values:
            e = energy_level(m, n, l)
            show = e.physical or cfg.allow_unphysical
            rows.append([n, l, _f(e.energy) if show else "", _f(e.K) if show else "",
                         _f(e.Q), _f(e.S), "true" if e.physical else "false"])
    return _csv(["n", "l", "energy_cm1", "K", "Q", "S", "physical"], rows), EXIT_OK


def _support(wf, floor=1e-10):
    # r-interval where |R| exceeds floor * max|R|
    ep = wf.molecule.ep
    r = np.linspace(1e-3, ep.re + 60.0 / ep.alpha, 40001)
    vals = np.abs(wf(r))
    keep = np.nonzero(vals > floor * vals.max())[0]
    return r[keep[0]], r[keep[-1]]


def run_wavefunction(cfg):
    m = cfg.molecule
    samples = cfg.grid_points or DEFAULT_SAMPLES
    rows = []
    for n in cfg.n_values:
        for l in cfg.l_values:
            e = energy_level(m, n, l)
            if not e.physical:
                print(f"skipping n={n}, l={l}: not a bound state", file=sys.stderr)
                continue
            wf = make_wavefunction(m, e)
            lo, hi = _support(wf)
            for r in np.linspace(lo, hi, samples):
                rows.append([n, l, _f(r), _f(wf(r))])
    return _csv(["n", "l", "r_angstrom", "R"], rows), EXIT_OK


def run_validate(cfg):
    m = cfg.molecule
    points = cfg.grid_points or DEFAULT_POINTS
    rows, code = [], EXIT_OK
    for n in cfg.n_values:
        for l in cfg.l_values:
            e = energy_level(m, n, l)
            if not e.physical and not cfg.allow_unphysical:
                continue
            v = validate(m, n, l, points=points, require_physical=False)
            tol = cfg.tolerance if cfg.tolerance is not None else max(
                DEFAULT_VALIDATE_TOL, 1e-8 * abs(v.E_closed))
            converged = v.approx.converged and v.exact.converged
            ok = v.closed_vs_approx <= tol
            if l == 0:
                ok = ok and v.closed_vs_exact <= tol
            if not converged:
                code = max(code, EXIT_NUMERIC)
            elif not ok:
                code = EXIT_TOLERANCE
            rows.append([n, l, _f(v.E_closed), _f(v.E_oracle_approx), _f(v.E_oracle_exact),
                         _f(v.closed_vs_approx), _f(v.closed_vs_exact),
                         "true" if e.physical else "false",
                         "true" if converged else "false", "ok" if ok else "FAIL"])
    header = ["n", "l", "E_closed", "E_oracle_approx", "E_oracle_exact",
              "dev_approx", "dev_exact", "physical", "converged", "status"]
    return _csv(header, rows), code


def run_tables_task(allow_unphysical):
    rows = tables.run_tables(allow_unphysical)
    failed = [r for r in rows if r.failed]
    for r in failed:
        print(f"tolerance breach: table {r.table} {r.molecule} n={r.n} l={r.l}: "
              f"computed {r.computed} vs {r.reference}", file=sys.stderr)
    for r in rows:
        if "unphysical" in r.status:
            print(f"note: table {r.table} {r.molecule} n={r.n}: {r.status}", file=sys.stderr)
    return tables.to_csv(rows), (EXIT_TOLERANCE if failed else EXIT_OK)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.task == "tables":
            text, code = run_tables_task(args.allow_unphysical)
        else:
            if not args.config:
                raise UsageError(f"--config is required for the {args.task} task")
            cfg = load_config(args.config, task=args.task, n_range=args.n, l_range=args.l,
                              allow_unphysical=args.allow_unphysical, output_path=args.out,
                              grid_points=args.grid_points, tolerance=args.tolerance)
            runner = {"spectrum": run_spectrum, "wavefunction": run_wavefunction,
                      "validate": run_validate}[args.task]
            text, code = runner(cfg)
    except (UsageError, ConfigError) as exc:
        print(f"epnu: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, NoBoundStateError, NonPhysicalError) as exc:
        print(f"epnu: numeric failure in {args.task}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
