#!/usr/bin/env python3
"""Run every verification suite and print the consolidated report.

Equivalent to ``thetalift verify --suite all`` but convenient from a
checkout without installing the console script.
"""

import argparse
import sys

from thetalift.enumeration import SUITES, verify_tables
from thetalift.theta import load_tables


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--suite",
        default="all",
        choices=sorted(SUITES) + ["all"],
        help="which suite to run (default: all)",
    )
    parser.add_argument("--table-dir", default=None, help="table directory override")
    args = parser.parse_args(argv)

    report = verify_tables(args.suite, load_tables(args.table_dir))
    print(report.render())
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
