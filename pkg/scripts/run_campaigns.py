#!/usr/bin/env python3
"""Run the standard weakly-revlex campaigns and write JSON-lines logs to results/.

    python scripts/run_campaigns.py --jobs 4
    python scripts/run_campaigns.py --nvars 3 --degrees 2 2 3 --trials 500

Re-running resumes: already-logged trials are skipped.
"""

import argparse
import json
import logging
from pathlib import Path

from genericgb.coeff import CoefficientDomain
from genericgb.harness import TrialConfig, run_campaign

STANDARD = [
    (2, (4, 7), 50),
    *[(2, (d, d), 20) for d in range(1, 9)],
    (3, (2, 2, 2), 100),
    (3, (3, 3, 3), 100),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nvars", type=int)
    ap.add_argument("--degrees", type=int, nargs="+")
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--field", default="prime:2147483647")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    domain = CoefficientDomain.parse(args.field)
    if args.nvars:
        plan = [(args.nvars, tuple(args.degrees), args.trials)]
    else:
        plan = STANDARD
    outdir = Path(args.outdir)
    rows = []
    for nvars, degrees, trials in plan:
        cfg = TrialConfig(nvars, degrees, domain, trials, args.seed)
        name = f"verify_n{nvars}_d{'-'.join(map(str, cfg.sorted_degrees))}_s{args.seed}.jsonl"
        summary = run_campaign(cfg, outdir / name, jobs=args.jobs)
        print(summary)
        rows.append(summary.to_json())
    (outdir / "summary.json").write_text(json.dumps(rows, indent=2) + "\n")


if __name__ == "__main__":
    main()
