#!/usr/bin/env python3
"""Cross-validate the two-variable closed form over a grid of (n, m) and seeds.

Prints one CSV row per instance; the exit status is nonzero if any instance
disagrees with Buchberger.
"""

import argparse
import csv
import sys

from genericgb.closedform import run_closed_form
from genericgb.coeff import CoefficientDomain


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=10)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--field", default="prime:2147483647")
    args = ap.parse_args()
    domain = CoefficientDomain.parse(args.field)

    out = csv.writer(sys.stdout)
    out.writerow(["n", "m", "seed", "generators", "agreement", "resamples", "elapsed_ms"])
    failed = 0
    for n in range(1, args.max_degree + 1):
        for m in range(n, args.max_degree + 1):
            for seed in range(args.seeds):
                rep = run_closed_form(n, m, domain, seed)
                failed += not rep.agreement
                out.writerow([n, m, seed, len(rep.initial_ideal), rep.agreement, rep.resamples, rep.elapsed_ms])
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
