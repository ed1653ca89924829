"""Command-line entry point: ``gitsmooth <command> --r R --n N ...``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .core import (
    GrassmannianContext, InvalidTupleError, all_tuples, enumerate_interval,
    format_tuple, parse_tuple, bottom_tuple, to_partition, top_tuple,
)
from .reports import (
    check_criteria, check_semistable, check_singular, render, survey, survey_csv,
)
from .semistability import minimal_semistable, require_coprime
from .smoothness import IntegrityError, analyze
from .words import canonical_reduced_word, format_word

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_DISAGREE = 2


def _context_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--r", type=int, required=True, help="subspace dimension")
    p.add_argument("--n", type=int, required=True, help="ambient dimension")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gitsmooth",
        description="Smoothness of torus quotients of Schubert varieties in G(r, n).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("minimal", help="minimal semistable tuple and its reduced word")
    _context_args(p)

    p = sub.add_parser("analyze", help="smoothness verdict for one Schubert variety")
    _context_args(p)
    p.add_argument("--w", required=True, help="comma-separated tuple, e.g. 3,5,8,9")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("survey", help="verdict for every tuple above the minimal one")
    _context_args(p)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("diagram", help="Young diagram of a tuple")
    _context_args(p)
    p.add_argument("--w", required=True)
    style = p.add_mutually_exclusive_group()
    style.add_argument("--latex", action="store_true")
    style.add_argument("--filled", action="store_true")

    p = sub.add_parser("oracle", help="cross-check the criteria against brute-force oracles")
    _context_args(p)
    p.add_argument("--w", help="restrict to one tuple (default: all of I(r,n))")
    p.add_argument("--check", choices=["singular", "semistable", "all"], default="all")
    p.add_argument("--degree", type=int, default=1, help="witness degree for the semistable check")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("enumerate", help="list tuples of I(r,n) in an interval")
    _context_args(p)
    p.add_argument("--min", dest="lo")
    p.add_argument("--max", dest="hi")
    return parser


def _cmd_minimal(args, ctx: GrassmannianContext) -> int:
    a = minimal_semistable(ctx)
    print(f"minimal: ({format_tuple(a)})")
    print(f"word: {format_word(canonical_reduced_word(a))}")
    return EXIT_OK


def _cmd_analyze(args, ctx: GrassmannianContext) -> int:
    w = parse_tuple(args.w, ctx)
    report = analyze(w, ctx)
    if args.format == "json":
        print(json.dumps(report.to_dict()))
        return EXIT_OK
    print(f"w: ({format_tuple(report.w)}) in G({ctx.r},{ctx.n})")
    print(f"minimal: ({format_tuple(report.minimal)})")
    print(f"verdict: {report.verdict}")
    comps = " ".join(f"({format_tuple(v)})" for v in report.components) or "none"
    print(f"singular components: {comps}")
    if report.semistable_nonempty:
        dom = " ".join(f"({format_tuple(v)})" for v in report.dominating_components) or "none"
        print(f"components above minimal: {dom}")
        print(f"violating rows: {', '.join(map(str, report.violating_rows)) or 'none'}")
    return EXIT_OK


def _cmd_survey(args, ctx: GrassmannianContext) -> int:
    rows = survey(ctx, jobs=args.jobs)
    if args.format == "json":
        payload = [
            {
                "w": list(row.w),
                "verdict": row.verdict,
                "component_count": row.component_count,
                "components": [list(v) for v in row.components],
            }
            for row in rows
        ]
        print(json.dumps(payload))
    else:
        sys.stdout.write(survey_csv(rows))
    return EXIT_OK


def _cmd_diagram(args, ctx: GrassmannianContext) -> int:
    w = parse_tuple(args.w, ctx)
    out = render(to_partition(w), filled=args.filled)
    if args.latex:
        print(out.latex)
    elif args.filled:
        print(out.filled_ascii())
    else:
        print(out.ascii)
    return EXIT_OK


def _cmd_oracle(args, ctx: GrassmannianContext) -> int:
    if args.check != "singular":
        require_coprime(ctx)
    tuples = [parse_tuple(args.w, ctx)] if args.w else list(all_tuples(ctx))
    mismatches = []
    if args.check in ("singular", "all"):
        found = check_singular(tuples, ctx.n, jobs=args.jobs)
        print(f"singular: {len(tuples)} tuples, {len(found)} mismatches")
        mismatches += found
    if args.check in ("semistable", "all"):
        found = check_semistable(tuples, ctx, degree=args.degree, jobs=args.jobs)
        print(f"semistable: {len(tuples)} tuples, {len(found)} mismatches")
        mismatches += found
    if args.check == "all":
        found = check_criteria(tuples, ctx, jobs=args.jobs)
        print(f"criteria: {len(tuples)} tuples, {len(found)} mismatches")
        mismatches += found
    for m in mismatches:
        print(f"MISMATCH {m.check} ({format_tuple(m.w)}): {m.detail}", file=sys.stderr)
    return EXIT_DISAGREE if mismatches else EXIT_OK


def _cmd_enumerate(args, ctx: GrassmannianContext) -> int:
    lo = parse_tuple(args.lo, ctx) if args.lo else bottom_tuple(ctx)
    hi = parse_tuple(args.hi, ctx) if args.hi else top_tuple(ctx)
    for w in enumerate_interval(lo, hi):
        print(format_tuple(w))
    return EXIT_OK


COMMANDS = {
    "minimal": _cmd_minimal,
    "analyze": _cmd_analyze,
    "survey": _cmd_survey,
    "diagram": _cmd_diagram,
    "oracle": _cmd_oracle,
    "enumerate": _cmd_enumerate,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        ctx = GrassmannianContext(args.r, args.n)
        return COMMANDS[args.command](args, ctx)
    except InvalidTupleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except IntegrityError as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return EXIT_DISAGREE


if __name__ == "__main__":
    sys.exit(main())
