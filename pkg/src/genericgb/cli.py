"""Command-line front end.

Exit codes: 0 all checks passed, 1 mathematical mismatch or finding,
2 usage or parse error, 3 degeneracy budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from pathlib import Path

from .closedform import ClosedFormSpec, closed_form_initial_ideal, run_closed_form
from .coeff import RATIONALS, CoefficientDomain, PrimeField
from .errors import ArityMismatch, Degenerate, Mismatch, ParseError, WrongArity
from .groebner import buchberger, initial_ideal
from .harness import TrialConfig, run_campaign
from .monideal import MonomialIdeal, is_revlex, is_weakly_revlex
from .poly import Polynomial, format_monomial
from .render import render_ascii, render_svg

EXIT_OK, EXIT_FINDING, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3

_RING = re.compile(r"^\s*ring\s+(\d+)\s+vars?\s+over\s+(\S+)\s*$")


class UsageError(Exception):
    pass


def parse_ideal_text(text: str) -> list[Polynomial]:
    """Parse ``ring k vars over <domain>`` followed by one polynomial per line."""
    lines = text.splitlines()
    header = None
    polys = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            mt = _RING.match(line)
            if not mt:
                raise ParseError("first line must read 'ring <k> vars over <domain>'", lineno, 1)
            try:
                header = (int(mt.group(1)), CoefficientDomain.parse(mt.group(2)))
            except ValueError as exc:
                raise ParseError(str(exc), lineno, mt.start(2) + 1) from None
            continue
        nvars, domain = header
        polys.append(Polynomial.parse(line, domain, nvars, line=lineno))
    if header is None:
        raise ParseError("missing ring header", 1, 1)
    if not polys:
        raise ParseError("no generators", len(lines) or 1)
    return polys


def _field(text):
    try:
        return CoefficientDomain.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(args, text: str):
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _read_source(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


# subcommands -----------------------------------------------------------------


def cmd_gb(args) -> int:
    if args.input:
        gens = parse_ideal_text(_read_source(args.input))
    elif args.gen:
        domain = args.field or RATIONALS
        gens = [Polynomial.parse(g, domain, args.nvars, line=i) for i, g in enumerate(args.gen, start=1)]
    else:
        raise UsageError("give an ideal file or at least one --gen")
    gens = [g for g in gens if g]
    if not gens:
        raise UsageError("all generators are zero")
    gb = buchberger(gens)
    J = initial_ideal(gb)
    if args.format == "json":
        out = json.dumps({
            "domain": str(gens[0].domain),
            "nvars": gens[0].nvars,
            "basis": [str(g) for g in gb],
            "leading_monomials": [format_monomial(g.lm) for g in gb],
            "initial_ideal": J.to_json(),
        }, indent=2) + "\n"
    else:
        lines = ["reduced Groebner basis (grevlex):"]
        lines += [f"  {g}" for g in gb]
        lines.append("leading monomials: " + ", ".join(format_monomial(g.lm) for g in gb))
        lines.append("initial ideal: " + J.dumps())
        out = "\n".join(lines) + "\n"
    _emit(args, out)
    return EXIT_OK


def cmd_closed_form(args) -> int:
    try:
        ClosedFormSpec(args.n, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    domain = args.field or PrimeField()
    report = run_closed_form(args.n, args.m, domain, args.seed, args.max_resamples, strict=False)
    data = report.to_json()
    if args.format == "json":
        out = json.dumps(data, indent=2) + "\n"
    else:
        J = report.initial_ideal
        lines = [
            f"n={args.n} m={args.m} mu={args.m - args.n} field={domain} seed={args.seed}",
            f"initial ideal: {J}",
            f"generators: {len(J)}",
            f"agreement: {report.agreement}",
            f"resamples: {report.resamples}",
            f"elapsed_ms: {report.elapsed_ms}",
        ]
        if report.diff:
            lines.append("diff: " + json.dumps(report.diff))
        out = "\n".join(lines) + "\n"
    _emit(args, out)
    return EXIT_OK if report.agreement else EXIT_FINDING


def _load_monomial_ideal(path: str) -> MonomialIdeal:
    text = _read_source(path)
    try:
        return MonomialIdeal.from_json(text)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"not a monomial-ideal JSON document: {exc}") from None


def cmd_check_ideal(args) -> int:
    J = _load_monomial_ideal(args.ideal)
    wrl = is_weakly_revlex(J)
    bound = args.degree_bound
    if bound is None and not J.is_artinian():
        bound = J.max_degree + 1
    rl = is_revlex(J, bound)
    if args.format == "json":
        out = json.dumps({"ideal": J.to_json(), "weakly_revlex": wrl.to_json(),
                          "revlex": rl.to_json()}, indent=2) + "\n"
    else:
        def show(name, res):
            s = f"{name}: {res.holds}"
            if res.witness:
                member, missing = res.witness
                s += f" (witness: {format_monomial(missing)} precedes {format_monomial(member)})"
            if not res.exact:
                s += f" [checked up to degree {res.degree_bound}]"
            return s
        out = f"ideal: {J}\n{show('weakly revlex', wrl)}\n{show('revlex', rl)}\n"
    _emit(args, out)
    return EXIT_OK if wrl.holds else EXIT_FINDING


def cmd_staircase(args) -> int:
    if args.closed_form:
        n, m = args.closed_form
        try:
            J = closed_form_initial_ideal(ClosedFormSpec(n, m))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif args.ideal:
        J = _load_monomial_ideal(args.ideal)
    else:
        raise UsageError("give a monomial-ideal JSON file or --closed-form N M")
    text = render_svg(J) if args.render == "svg" else render_ascii(J)
    _emit(args, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        config = TrialConfig(args.nvars, tuple(args.degrees), args.field or PrimeField(),
                             args.trials, args.seed, args.max_resamples)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        summary = run_campaign(config, args.log, jobs=args.jobs)
    except Mismatch as exc:
        print(f"error: {exc} {json.dumps(exc.diff)}", file=sys.stderr)
        return EXIT_FINDING
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        out = json.dumps(summary.to_json(), indent=2) + "\n"
    else:
        out = str(summary) + "\n"
        for r in summary.failures:
            out += f"  finding: trial {r.trial} seed {r.seed} ideal {json.dumps(r.initial_ideal)}\n"
    _emit(args, out)
    return EXIT_OK if not summary.failures else EXIT_FINDING


# parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--field", type=_field, default=None,
                        help="rational | prime:p (default: prime:2147483647 for sampling)")
    shared.add_argument("--seed", type=int, default=0)
    shared.add_argument("--format", choices=("text", "json"), default="text")
    shared.add_argument("--out", default=None, help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="genericgb", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", parents=[shared], help="reduced Groebner basis and initial ideal")
    p.add_argument("input", nargs="?", help="ideal file ('-' for stdin)")
    p.add_argument("--gen", action="append", help="inline generator (repeatable)")
    p.add_argument("--nvars", type=int, default=2, help="variable count for --gen")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("closed-form", parents=[shared], help="cross-validate the two-variable closed form")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--max-resamples", type=int, default=5)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("check-ideal", parents=[shared], help="weakly revlex / revlex test of a JSON ideal")
    p.add_argument("ideal", help="monomial-ideal JSON file ('-' for stdin)")
    p.add_argument("--degree-bound", type=int, default=None)
    p.set_defaults(func=cmd_check_ideal)

    p = sub.add_parser("staircase", parents=[shared], help="draw a two-variable staircase")
    p.add_argument("ideal", nargs="?", help="monomial-ideal JSON file ('-' for stdin)")
    p.add_argument("--closed-form", nargs=2, type=int, metavar=("N", "M"))
    p.add_argument("--render", choices=("ascii", "svg"), default="ascii")
    p.set_defaults(func=cmd_staircase)

    p = sub.add_parser("verify", parents=[shared], help="randomized weakly-revlex campaign")
    p.add_argument("--nvars", type=int, required=True)
    p.add_argument("--degrees", type=int, nargs="+", required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--log", default=None, help="JSON-lines trial log (appended, resumable)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-resamples", type=int, default=5)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ParseError, UsageError, ArityMismatch, WrongArity) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Degenerate as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
