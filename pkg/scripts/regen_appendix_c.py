#!/usr/bin/env python3
"""Regenerate the rank-3 classification table from scratch and compare
it with the stored rows, at one or more values of the parameter b.

Usage:
    python3 scripts/regen_appendix_c.py              # full grid
    python3 scripts/regen_appendix_c.py 0 1 1/2 generic
"""

import argparse
import sys
from fractions import Fraction

from thetalift.enumeration import BETA_GRID, regenerate_appendix_c
from thetalift.theta import load_tables


def parse_beta(text: str):
    return text if text == "generic" else Fraction(text)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "betas",
        nargs="*",
        type=parse_beta,
        help="values of b to regenerate at (default: the built-in grid)",
    )
    parser.add_argument("--table-dir", default=None, help="table directory override")
    args = parser.parse_args(argv)

    tables = load_tables(args.table_dir)
    ok = True
    for beta in args.betas or BETA_GRID:
        report = regenerate_appendix_c(beta, tables)
        print(report.render())
        ok = ok and report.ok
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
