"""Time the compiled and pure-Python dissection kernels side by side.

    python benchmarks/bench_kernels.py --max-m 11 --repeat 3
"""

from __future__ import annotations

import argparse
import time

from fusscat.kernels import available_backends


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-m", type=int, default=8)
    parser.add_argument("--max-m", type=int, default=11)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    names = sorted(backends)
    print(f"{'kernel':<16}{'m':>4}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) == 2 else ""))
    for kernel in ("face_histograms", "diagonal_sets"):
        for m in range(args.min_m, args.max_m + 1):
            sizes = range(3, m + 1)
            times = {n: best_of(lambda: getattr(backends[n], kernel)(m, sizes), args.repeat) for n in names}
            row = f"{kernel:<16}{m:>4}" + "".join(f"{times[n]:>11.4f}s" for n in names)
            if len(names) == 2:
                row += f"{times['python'] / times['cython']:>11.1f}x"
            print(row)


if __name__ == "__main__":
    main()
