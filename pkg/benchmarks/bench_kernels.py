"""Time the compiled kernels against the numpy fallbacks.

    python benchmarks/bench_kernels.py [--n 1000] [--width 200] [--repeat 3]
"""

import argparse
import timeit

import numpy as np

from snnood import _ext
from snnood._ext import pure


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, default=1000, help="count vectors per class")
    ap.add_argument("--width", type=int, default=200, help="hidden layer width")
    ap.add_argument("--queries", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    x = rng.integers(0, 25, (args.n, args.width)).astype(np.float64)
    q = rng.integers(0, 25, (args.queries, args.width)).astype(np.float64)
    cents = x[:10].copy()
    dist = _ext.pairwise_l1(x)
    if _ext.BACKEND != "compiled":
        print("compiled extension not built; only the fallback is timed")
    compiled = _ext._impl

    cases = {
        f"pairwise_l1 ({args.n}x{args.width})": lambda impl: impl.pairwise_l1(x),
        f"cross_l1 ({args.queries}x10)": lambda impl: impl.cross_l1(q, cents),
        f"nn_chain_average (n={args.n})": lambda impl: impl.nn_chain_average(dist),
    }
    print(f"{'kernel':34s} {'compiled [s]':>13s} {'numpy [s]':>11s} {'speedup':>8s}")
    for name, fn in cases.items():
        t_py = min(timeit.repeat(lambda: fn(pure), number=1, repeat=args.repeat))
        if compiled is pure:
            print(f"{name:34s} {'-':>13s} {t_py:11.4f} {'-':>8s}")
            continue
        t_c = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat))
        np.testing.assert_allclose(fn(compiled), fn(pure), rtol=0, atol=1e-9)
        print(f"{name:34s} {t_c:13.4f} {t_py:11.4f} {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
