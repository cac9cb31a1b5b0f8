"""Run the reproduction suite and write certificates plus a report."""

import argparse
import sys

from efdepth.suite import run_paper_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--level", choices=("core", "extended"), default="core")
    ap.add_argument("--out", default="suite_out", help="artifact directory")
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()
    report = run_paper_suite(args.level, args.out, seed=args.seed,
                             progress=lambda r: print(f"row {r.criterion}: {'PASS' if r.passed else 'FAIL'} "
                                                      f"({r.seconds:.1f}s)", file=sys.stderr, flush=True))
    print(report.table())
    sys.exit(0 if report.passed else 1)


if __name__ == "__main__":
    main()
