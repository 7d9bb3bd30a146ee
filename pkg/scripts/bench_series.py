#!/usr/bin/env python3
"""Timing checks for the series kernel at desk scale.

Usage:
    python3 scripts/bench_series.py [--order 1000]
"""

import argparse
import time

from qseries.claims import registry, verify
from qseries.mock import mock_series
from qseries.products import eta_quotient


def timed(label, fn):
    start = time.perf_counter()
    fn()
    print(f"{label:46s} {time.perf_counter() - start:7.3f}s")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=1000)
    args = parser.parse_args()
    n = args.order

    timed(f"eta quotient l4^3/(l1 l2) at order {n}",
          lambda: eta_quotient({4: 3, 1: -1, 2: -1}, n))
    timed(f"eta quotient l3^5 l2^3/(l6 l1^6) at order {n}",
          lambda: eta_quotient({3: 5, 6: -1, 2: 3, 1: -6}, n))
    timed(f"eta quotient 1/l1^4 at order {n}",
          lambda: eta_quotient({1: -4}, n))
    timed(f"mock series lambda at order {n}", lambda: mock_series("lambda", n))
    timed(f"mock series v at order {n}", lambda: mock_series("v", n))
    timed("verify all (full registry)",
          lambda: [verify(c) for c in registry()])


if __name__ == "__main__":
    main()
