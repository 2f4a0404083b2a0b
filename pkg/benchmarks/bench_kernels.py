"""Compare the numba and numpy kernels on set-composition product tables.

    python3 benchmarks/bench_kernels.py [--max-n 6] [--repeat 3]

Times building the product table of B^n and scanning it for LRB violations.
Numba timings exclude the first (compiling) call.
"""
from __future__ import annotations

import argparse
import time

from lrbhopf import _kernels
from lrbhopf.setcomp import SetCompFamily


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    fam = SetCompFamily(max_n=args.max_n)
    print(f"numba backend available: {_kernels.BACKEND == 'numba'}")
    print(f"{'n':>2} {'faces':>6} {'kernel':>8} {'numpy s':>10} {'numba s':>10} {'speedup':>8}")
    for n in range(5, args.max_n + 1):
        codes, lookup = fam.codes_array(n)
        table = _kernels.setcomp_product_table_numpy(codes, lookup, n)
        runs = {
            "product": (lambda: _kernels.setcomp_product_table_numpy(codes, lookup, n),
                        lambda: _kernels.setcomp_product_table(codes, lookup, n)),
            "lrb": (lambda: _kernels.lrb_violation_numpy(table),
                    lambda: _kernels.lrb_violation(table)),
        }
        for name, (np_fn, nb_fn) in runs.items():
            nb_fn()  # compile
            t_np, t_nb = best_of(np_fn, args.repeat), best_of(nb_fn, args.repeat)
            print(f"{n:>2} {len(codes):>6} {name:>8} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
