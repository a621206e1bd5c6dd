#!/usr/bin/env python3
"""Run the verification suites from a checkout: prints the text report.

Equivalent to `fanopencils verify <selector>`; kept as a script so the
suites can be driven without installing the console entry point.
"""

import argparse
import sys

from fanopencils.verify import SELECTORS, run_verification


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("selector", nargs="?", default="all", choices=SELECTORS)
    ap.add_argument("--sample", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    report = run_verification(args.selector, sample=args.sample, seed=args.seed)
    print(report.format_text())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
