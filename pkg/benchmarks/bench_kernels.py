"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--vertices 3] [--repeat 3]

Both variants run on the same corpus of small negative-definite graphs and
their outputs are compared before any timing is reported.
"""
import argparse
import time

import numpy as np

from singres import canonical_degrees, fundamental_cycle, intersection_matrix
from singres import kernels
from singres.corpus import small_graphs


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    p = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    p.add_argument("--vertices", type=int, default=3)
    p.add_argument("--bound", type=int, default=8)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()

    graphs = list(small_graphs(args.vertices))
    mats = [intersection_matrix(g).to_numpy() for g in graphs]
    kdots = [np.array(canonical_degrees(g), dtype=np.int64) for g in graphs]
    zs = [np.array(fundamental_cycle(g).coefficients, dtype=np.int64) for g in graphs]
    print(f"{len(graphs)} graphs with <= {args.vertices} vertices")

    # compile outside the timed region
    m0 = mats[0]
    kernels.laufer_numba(m0, 10)
    kernels.antinef_minimum_numba(m0, 1)
    kernels.first_nonnegative_genus_numba(m0, kdots[0], zs[0])

    cases = {
        "laufer": (
            lambda fn: [fn(m, 100_000).tolist() for m in mats],
            kernels.laufer_numba, kernels.laufer_numpy,
        ),
        f"antinef box {args.bound}": (
            lambda fn: [(b.tolist(), c, u) for b, c, u in (fn(m, args.bound) for m in mats)],
            kernels.antinef_minimum_numba, kernels.antinef_minimum_numpy,
        ),
        "subcycle genus scan": (
            lambda fn: [fn(m, k, z).tolist() for m, k, z in zip(mats, kdots, zs)],
            kernels.first_nonnegative_genus_numba, kernels.first_nonnegative_genus_numpy,
        ),
    }
    print(f"{'kernel':<24}{'numba [s]':>12}{'numpy [s]':>12}{'speedup':>10}")
    for name, (run, fast, slow) in cases.items():
        t_fast, out_fast = _time(lambda: run(fast), args.repeat)
        t_slow, out_slow = _time(lambda: run(slow), args.repeat)
        if out_fast != out_slow:
            raise SystemExit(f"{name}: numba and numpy results differ")
        print(f"{name:<24}{t_fast:>12.4f}{t_slow:>12.4f}{t_slow / t_fast:>9.1f}x")


if __name__ == "__main__":
    main()
