"""Time the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from cyclic_sieve import _kernels
from cyclic_sieve.gf import field_from_q
from cyclic_sieve.polyring import divisors


def cases():
    F2, F3 = field_from_q(2), field_from_q(3)
    rng = np.random.default_rng(0)
    rows = rng.integers(0, 2, size=(12, 24)).astype(np.uint8)
    words = _kernels.NUMPY_IMPL["span_words"](rows, F2.add_table, F2.mul_table)
    rank2 = np.arange(2, dtype=np.int64)
    divs = np.asarray(divisors(24), dtype=np.int64)
    num = rng.integers(0, 3, size=2000).astype(np.int64)
    den = rng.integers(0, 3, size=40).astype(np.int64)
    den[-1] = 1
    f3 = (F3.add_table, F3.mul_table, F3.neg_table)
    coeffs = np.array([2, 1, 0, 0, 0, 0, 1, 0, 0, 0], dtype=np.int64)
    seed = np.array([0] * 9 + [1], dtype=np.int64)
    return {
        "span_words 2^12 x 24": ("span_words", (rows, F2.add_table, F2.mul_table)),
        "word_stats 4096 x 24": ("word_stats", (words, rank2)),
        "word_periods 4096 x 24": ("word_periods", (words, divs)),
        "poly_divmod 2000 / 40": ("poly_divmod", (num, den, *f3, F3.inv_table)),
        "lfsr_run 3^10": ("lfsr_run", (coeffs, seed, 3**10, *f3)),
        "lfsr_period 3^10": ("lfsr_period", (coeffs, seed, 3**10, *f3)),
    }


def best_time(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels.NUMBA_IMPL is None:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'kernel':<26}{'numpy (s)':>12}{'numba (s)':>12}{'speedup':>10}")
    for label, (name, a) in cases().items():
        _kernels.NUMBA_IMPL[name](*a)  # compile outside the timing
        t_np = best_time(_kernels.NUMPY_IMPL[name], a, args.repeat)
        t_nb = best_time(_kernels.NUMBA_IMPL[name], a, args.repeat)
        print(f"{label:<26}{t_np:>12.4f}{t_nb:>12.4f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
