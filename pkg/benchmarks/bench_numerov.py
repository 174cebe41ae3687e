"""Compare the numba kernels with the pure-Python fallback.

The backend is chosen at import time, so each one runs in its own
subprocess.  Usage::

    python benchmarks/bench_numerov.py [--repeat 3] [--points 20001]
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from epnu import backend
from epnu.config import load_molecule
from epnu.oracle import default_grid, effective_potential, solve_radial

repeat, points = int(sys.argv[1]), int(sys.argv[2])
m = load_molecule("ar2.cfg")
grid = default_grid(m, 0, "approx", points)
v = effective_potential(m, 0, "approx")
solve_radial(v, m.lam, 0, grid)  # warm-up (jit compilation / cache load)
best = float("inf")
for _ in range(repeat):
    t0 = time.perf_counter()
    for n in range(4):
        res = solve_radial(v, m.lam, n, grid)
    best = min(best, time.perf_counter() - t0)
print(json.dumps({"backend": backend(), "seconds": best, "energy": res.energy}))
"""


def run(disable, repeat, points):
    env = dict(os.environ)
    if disable:
        env["EPNU_DISABLE_NUMBA"] = "1"
    else:
        env.pop("EPNU_DISABLE_NUMBA", None)
    out = subprocess.run([sys.executable, "-c", WORKER, str(repeat), str(points)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--points", type=int, default=20001)
    args = ap.parse_args()
    fast = run(False, args.repeat, args.points)
    slow = run(True, args.repeat, args.points)
    for r in (fast, slow):
        print(f"{r['backend']:>7}: {r['seconds'] * 1e3:10.2f} ms for 4 Ar2 s-wave solves"
              f"  (E_3 = {r['energy']:.10f} cm^-1)")
    print(f"speed-up: {slow['seconds'] / fast['seconds']:.1f}x; "
          f"|dE| = {abs(fast['energy'] - slow['energy']):.2e} cm^-1")


if __name__ == "__main__":
    main()
