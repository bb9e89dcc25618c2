"""Width and run-time comparison of the five orderings on the grid / random
3-uniform trend suite.

    python scripts/trend_experiment.py --seed 2011 --count 32 --out trend.csv
"""

import argparse
import logging
import sys

from nsdp.bench import emit_report, run_benchmark, summarize_wins
from nsdp.orderings import Heuristic
from nsdp.suites import DEFAULT_TREND_SEED, trend_suite


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=DEFAULT_TREND_SEED)
    parser.add_argument("--count", type=int, default=32)
    parser.add_argument("--repeats", type=int, default=1)
    parser.add_argument("--budget", type=int, default=2**22)
    parser.add_argument("--out", help="CSV destination (default: markdown table on stdout)")
    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO)

    records = run_benchmark(trend_suite(args.count, args.seed), list(Heuristic), args.repeats, args.budget)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(emit_report(records, "csv"))
    else:
        sys.stdout.write(emit_report(records, "markdown", metric="induced_width"))
    for metric in ("induced_width", "solve_time"):
        print(summarize_wins(records, metric).format())


if __name__ == "__main__":
    main()
