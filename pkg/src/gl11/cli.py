"""Command line interface: ``verify``, ``alexander`` and ``eval``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .alexander import BraidParseError, BraidWord, IndexOutOfRange, alexander_poly, alexander_via_cut_moy
from .ladder import LadderParseError, evaluate_ladder, parse_ladder
from .morse import BoundaryMismatch, MorseParseError, evaluate_morse, parse_morse
from .relations import FAMILIES, run_family
from .superlin import NotScalar

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_NOT_SCALAR = 2
EXIT_PARSE = 3


class _Parser(argparse.ArgumentParser):
    # usage errors count as parse errors; exit code 2 is reserved for NotScalar
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gl11", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="check relation families over a parameter grid")
    v.add_argument("family", choices=sorted(FAMILIES) + ["all"])
    v.add_argument("--max-color", type=int, default=4)
    v.add_argument("--max-m", type=int, default=4)
    v.add_argument("--failures-only", action="store_true", help="only print failing instances")

    a = sub.add_parser("alexander", help="Alexander polynomial of a braid closure")
    a.add_argument("--strands", type=int, required=True)
    a.add_argument("--word", required=True, help='signed generators, e.g. "1 -2 1 -2"')
    a.add_argument("--colors", help='one color per strand, e.g. "1 1"')
    a.add_argument("--cut-moy", action="store_true", help="use the cut-open MOY expansion")
    a.add_argument("--raw", action="store_true", help="print only the unnormalized scalar")

    e = sub.add_parser("eval", help="evaluate a ladder or Morse diagram file")
    g = e.add_mutually_exclusive_group(required=True)
    g.add_argument("--ladder", type=Path)
    g.add_argument("--morse", type=Path)
    return p


def _verify(args) -> int:
    failed = total = 0
    for report in run_family(args.family, args.max_color, args.max_m):
        total += 1
        failed += not report.holds
        if not (args.failures_only and report.holds):
            print(report)
    print(f"{total - failed}/{total} hold")
    return EXIT_OK if failed == 0 else EXIT_FAILED


def _alexander(args) -> int:
    try:
        braid = BraidWord.parse(args.strands, args.word, args.colors)
    except (BraidParseError, IndexOutOfRange, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        result = alexander_via_cut_moy(braid) if args.cut_moy else alexander_poly(braid)
    except NotScalar as exc:
        print(f"error: residual map is not scalar: {exc}", file=sys.stderr)
        return EXIT_NOT_SCALAR
    if args.raw:
        print(result.delta)
    else:
        print(f"delta: {result.delta}")
        print(f"normalized: {result.normalized}")
    return EXIT_OK


def _eval(args) -> int:
    path = args.ladder or args.morse
    try:
        text = path.read_text()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.ladder:
            ladder = parse_ladder(text)
            matrix = evaluate_ladder(ladder)
            head = f"ladder {ladder.input} -> {ladder.output}"
        else:
            diagram = parse_morse(text)
            matrix = evaluate_morse(diagram)
            src = " ".join(map(str, diagram.source)) or "()"
            tgt = " ".join(map(str, diagram.target)) or "()"
            head = f"morse {src} -> {tgt}"
    except (LadderParseError, MorseParseError, BoundaryMismatch, ValueError) as exc:
        print(f"{path}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(head)
    print(matrix.render())
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"verify": _verify, "alexander": _alexander, "eval": _eval}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
