"""Compare the compiled and pure-Python kernels.

    python3 bench/benchmark.py [--height 60] [--box 3] [--repeat 3]

Reports the best wall time per backend and checks that both agree.
"""

import argparse
import time

from gaussquartic import kernels
from gaussquartic.curve import Curve
from gaussquartic.gaussian import GaussianInt
from gaussquartic.quartic import QuarticProblem, bounded_point_search, brute_force_solutions


def best_of(repeat, fn):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--height", type=int, default=60)
    ap.add_argument("--box", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if kernels.BACKEND != "compiled":
        print("compiled extension not available; only the python backend will run")
    backends = ["python"] + (["compiled"] if kernels.BACKEND == "compiled" else [])

    jobs = [
        (f"point search y^2 = x^3 - x, H={args.height}",
         lambda b: bounded_point_search(Curve(-1, 0), args.height, backend=b)),
        (f"point search y^2 = x^3 - 4, H={args.height}",
         lambda b: bounded_point_search(Curve(0, -4), args.height, backend=b)),
        (f"quartic box x^4 + y^4 = i z^2, parts in [-{args.box}, {args.box}]",
         lambda b: brute_force_solutions(QuarticProblem(1, GaussianInt(0, 1)), args.box, backend=b)),
    ]
    print(f"{'job':58} {'backend':9} {'seconds':>9}")
    for name, job in jobs:
        results = {}
        for b in backends:
            dt, out = best_of(args.repeat, lambda: job(b))
            results[b] = out
            print(f"{name:58} {b:9} {dt:9.4f}")
        outs = list(results.values())
        if isinstance(outs[0], list):
            outs = [sorted(o, key=str) for o in outs]
        if any(o != outs[0] for o in outs):
            raise SystemExit(f"backends disagree on: {name}")


if __name__ == "__main__":
    main()
