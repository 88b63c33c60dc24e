"""Compare the compiled and pure-Python Numerov backends.

    python3 benchmarks/bench_kernels.py [--points 200000] [--repeat 5]

Times a bare sweep over an oscillatory grid and a full eigenstate solve
with each available backend, and checks that both give identical output.
"""
import argparse
import time

import numpy as np

from genvirial import kernels
from genvirial.potentials import make_power_law
from genvirial.radial import DimensionConfig, Grid, solve_eigenstate


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def sweep_case(points):
    h = 50.0 / points
    g = np.full(points, -h * h / 12.0)  # y'' = -y
    y = np.zeros(points)

    def run():
        y[:] = 0.0
        y[0], y[1] = 0.0, np.sin(h)
        nodes = kernels.numerov_sweep(g, y, 1, points - 1, (1.0 - g[0]) * 0.0)
        return nodes, y.copy()

    return run


def solve_case(h):
    p = make_power_law(1, 2)
    grid = Grid.uniform(h, 12.0)

    def run():
        s = solve_eigenstate(p, DimensionConfig(3, 1), 2, grid=grid)
        return s.eps, s.R.copy()

    return run


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=200_000, help="sweep length")
    ap.add_argument("--h", type=float, default=1e-3, help="grid step for the solve case")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    initial = kernels.BACKEND
    results = {}
    try:
        for name in kernels.available_backends():
            kernels.use_backend(name)
            # the pure-Python solve is slow; time it once
            rep_solve = args.repeat if name == "compiled" else 1
            t_sweep, sweep_out = best_of(sweep_case(args.points), args.repeat)
            t_solve, solve_out = best_of(solve_case(args.h), rep_solve)
            results[name] = (t_sweep, t_solve, sweep_out, solve_out)
    finally:
        kernels.use_backend(initial)

    print(f"{'backend':<10} {'sweep [s]':>12} {'solve [s]':>12}")
    for name, (ts, tv, _, _) in results.items():
        print(f"{name:<10} {ts:>12.4f} {tv:>12.4f}")
    if len(results) == 2:
        c, p = results["compiled"], results["python"]
        print(f"speed-up: sweep x{p[0] / c[0]:.1f}, solve x{p[1] / c[1]:.1f}")
        same = (c[2][0] == p[2][0] and np.array_equal(c[2][1], p[2][1])
                and c[3][0] == p[3][0] and np.array_equal(c[3][1], p[3][1]))
        print("outputs identical" if same else "OUTPUTS DIFFER")
        return 0 if same else 1
    print("compiled extension not available; only the Python backend was timed")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
