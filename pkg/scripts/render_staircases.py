#!/usr/bin/env python3
"""Write SVG and ASCII staircases of the closed-form initial ideal for several (n, m)."""

import argparse
from pathlib import Path

from genericgb.closedform import ClosedFormSpec, closed_form_initial_ideal
from genericgb.render import render_ascii, render_svg


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("pairs", nargs="*", default=["2,3", "3,3", "4,7"], help="n,m pairs")
    ap.add_argument("--outdir", default="results/staircases")
    args = ap.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for pair in args.pairs:
        n, m = map(int, pair.split(","))
        J = closed_form_initial_ideal(ClosedFormSpec(n, m))
        (outdir / f"staircase_{n}_{m}.svg").write_text(render_svg(J))
        (outdir / f"staircase_{n}_{m}.txt").write_text(render_ascii(J))
        print(f"n={n} m={m} {J}")
        print(render_ascii(J))


if __name__ == "__main__":
    main()
