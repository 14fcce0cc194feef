"""Time the numba and numpy search backends on the same exact solves.

    python benchmarks/bench_backends.py [--repeat 3] [--workers 1] [--json]

Both backends must return the same optimum and witness; a mismatch exits 1.
"""
from __future__ import annotations

import argparse
import json
import statistics
import sys
import time

from offalliance import generators as gen
from offalliance._kernels import HAVE_NUMBA
from offalliance.solvers import (
    independence_number,
    min_dominating,
    min_global_offensive_alliance,
    min_offensive_alliance,
)

CASES = [
    ("petersen", gen.petersen(), "goa", 1),
    ("petersen", gen.petersen(), "oa", 3),
    ("hypercube(4)", gen.hypercube(4), "goa", 2),
    ("random_regular(18,3)", gen.random_regular(18, 3, seed=1), "goa", 1),
    ("random_regular(20,4)", gen.random_regular(20, 4, seed=2), "goa", 2),
    ("random_regular(22,3)", gen.random_regular(22, 3, seed=3), "dom", None),
    ("random_regular(24,3)", gen.random_regular(24, 3, seed=4), "alpha", None),
]

SOLVE = {
    "goa": lambda g, r, **kw: min_global_offensive_alliance(g, r, **kw),
    "oa": lambda g, r, **kw: min_offensive_alliance(g, r, **kw),
    "dom": lambda g, r, **kw: min_dominating(g, **kw),
    "alpha": lambda g, r, **kw: independence_number(g, **kw),
}


def run(backend, g, problem, r, repeat, workers):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = SOLVE[problem](g, r, backend=backend, workers=workers)
        times.append(time.perf_counter() - t0)
    return res, statistics.median(times)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    if not HAVE_NUMBA:
        print("numba is not importable; nothing to compare", file=sys.stderr)
        return 2

    # compile once so the first case is not charged for JIT
    run("numba", gen.complete(4), "goa", 1, 1, 1)

    rows, mismatch = [], False
    for name, g, problem, r in CASES:
        fast, t_numba = run("numba", g, problem, r, args.repeat, args.workers)
        slow, t_numpy = run("numpy", g, problem, r, args.repeat, args.workers)
        same = fast.optimum == slow.optimum and fast.witness == slow.witness
        mismatch |= not same
        rows.append({"graph": name, "n": g.n, "problem": problem, "r": r, "optimum": fast.optimum,
                     "numba_s": round(t_numba, 5), "numpy_s": round(t_numpy, 5),
                     "speedup": round(t_numpy / t_numba, 2) if t_numba else None, "agree": same})

    if args.json:
        print(json.dumps(rows, indent=1))
    else:
        head = f"{'graph':<22} {'n':>3} {'problem':<6} {'r':>4} {'opt':>4} {'numba s':>9} {'numpy s':>9} {'x':>7}  agree"
        print(head)
        for row in rows:
            print(f"{row['graph']:<22} {row['n']:>3} {row['problem']:<6} {row['r']!s:>4} {row['optimum']:>4} "
                  f"{row['numba_s']:>9.4f} {row['numpy_s']:>9.4f} {row['speedup']!s:>7}  {row['agree']}")
    return 1 if mismatch else 0


if __name__ == "__main__":
    sys.exit(main())
