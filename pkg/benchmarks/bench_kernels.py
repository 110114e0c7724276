"""Compare the numba-compiled kernels against the plain-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [n]

Times the half-period scan and a curve track on an n-element random sequence
(default n=500, about 125k transpositions). The fallback is the same source
executed without @njit, which is what you get with BALANCED_LINES_NUMBA=0.
"""
import sys
import time

import numpy as np

from balanced_lines import _kernels
from balanced_lines.sequence import random_sequence


def timeit(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 500
    n += n % 2
    seq = random_sequence(n, n // 2, seed=1)
    print(f"n={seq.n} (b={seq.b}, r={seq.r}), word length {len(seq.word)}")

    pi0, word, weights = seq._pi0_a, seq.full_word(), seq._weights_a
    member = np.zeros(seq.n, bool)
    member[[i for i in range(seq.n) if seq.weights[i] > 0]] = True

    rows = []
    if _kernels.BACKEND == "numba":
        _kernels.run_word(pi0, word, weights)  # compile outside the timing
        _kernels.track_rank(pi0, word, weights, member, 1)
        rows.append(("run_word", "numba",
                     timeit(_kernels.run_word, pi0, word, weights)))
        rows.append(("track_rank", "numba",
                     timeit(_kernels.track_rank, pi0, word, weights, member, 1)))
    rows.append(("run_word", "python",
                 timeit(_kernels.run_word_py, pi0, word, weights, repeat=1)))
    rows.append(("track_rank", "python",
                 timeit(_kernels.track_rank_py, pi0, word, weights, member, 1, repeat=1)))

    print(f"{'kernel':<12} {'backend':<8} {'seconds':>10}")
    for name, backend, secs in rows:
        print(f"{name:<12} {backend:<8} {secs:>10.4f}")
    by = {}
    for name, backend, secs in rows:
        by.setdefault(name, {})[backend] = secs
    for name, d in by.items():
        if "numba" in d and "python" in d:
            print(f"{name}: numba is {d['python'] / d['numba']:.0f}x faster")


if __name__ == "__main__":
    main()
