#!/usr/bin/env python3
"""Batch-validate the boost pipeline against the exact partial-transpose test.

Runs every random family with a shared seed and prints one agreement report
per family; exits nonzero if any generic sample disagrees.
"""

import argparse
import sys

from qubitsep import FAMILIES, SampleSpec, batch_stats


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=2000, help="samples per family")
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument(
        "--families", nargs="*", default=list(FAMILIES), choices=FAMILIES
    )
    args = parser.parse_args()

    failures = 0
    header = (
        f"{'family':18s} {'total':>6s} {'generic':>8s} {'non-gen':>8s} "
        f"{'agree':>6s} {'disagree':>9s} {'boundary':>9s} {'max resid':>10s}"
    )
    print(header)
    print("-" * len(header))
    for family in args.families:
        spec = SampleSpec(family=family, count=args.count, seed=args.seed)
        r = batch_stats(spec)
        failures += r.disagree_count
        print(
            f"{family:18s} {r.total:6d} {r.generic_count:8d} {r.nongeneric_count:8d} "
            f"{r.agree_count:6d} {r.disagree_count:9d} {r.boundary_count:9d} "
            f"{r.max_offdiag_residual:10.2e}"
        )
    if failures:
        print(f"\nFAIL: {failures} disagreement(s) between the two criteria")
        return 1
    print("\nOK: zero disagreements between the two criteria")
    return 0


if __name__ == "__main__":
    sys.exit(main())
