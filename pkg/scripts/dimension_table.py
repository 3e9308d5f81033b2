#!/usr/bin/env python3
"""Print the center-dimension table for small n, by all three routes.

The interesting row is the group algebra at n = 6, where the closed formula
(12) stops matching the commutant dimension (11, the partition count): the
formula belongs to the Nilcoxeter and 0-Hecke algebras only.
"""

import argparse
import time

from mobius_centers import GROUP_ALGEBRA, NILCOXETER, ZERO_HECKE
from mobius_centers.centers import center
from mobius_centers.partitions import center_dim_formula
from mobius_centers.quotients import quotient_dim

ALGEBRAS = [("nilcoxeter", NILCOXETER), ("0-hecke", ZERO_HECKE), ("group", GROUP_ALGEBRA)]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5,
                        help="largest number of strands (default 5; 6 takes seconds)")
    args = parser.parse_args()

    print(f"{'n':>2} {'algebra':<10} {'formula':>8} {'quotient':>9} {'commutant':>10} {'time':>8}")
    for n in range(1, args.max_n + 1):
        formula = center_dim_formula(n)
        for name, params in ALGEBRAS:
            start = time.perf_counter()
            by_rank = quotient_dim(n, params, twisted=True)
            by_commutant = center(n, params).dim
            elapsed = time.perf_counter() - start
            marker = "" if by_rank == by_commutant == formula else "  <- formula differs"
            print(
                f"{n:>2} {name:<10} {formula:>8} {by_rank:>9} {by_commutant:>10}"
                f" {elapsed:>7.2f}s{marker}"
            )


if __name__ == "__main__":
    main()
