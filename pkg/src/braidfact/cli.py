"""Command-line workbench for cuspidal factorizations.

Subcommands map one-to-one onto the library operations: verify,
hurwitz, vk, enumerate, chisini, plus corpus access. Exit codes are a
contract: 0 success, 1 domain failure (unverified input, distinguished
pair, bound not applicable), 2 usage or parse error, 3 search budget
exhausted without a verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import corpus
from .errors import BraidFactError, ParseError, StrandMismatch
from .factorization import CuspidalFactorization, parse
from .hurwitz import (
    DEFAULT_BUDGET,
    DEFAULT_CONJUGATION_RADIUS,
    equivalent,
    parse_witness,
    replay,
)
from .reports import (
    build_chisini_report,
    build_enumerate_report,
    build_replay_report,
    build_search_report,
    build_verify_report,
    build_vk_report,
    render_text,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3


def _load(path: str) -> CuspidalFactorization:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def _emit(report: dict, fmt: str) -> None:
    if fmt == "structured":
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report))


def cmd_verify(args) -> tuple[dict | None, int]:
    F = _load(args.file)
    report = build_verify_report(F)
    return report, EXIT_OK if report["verified"] else EXIT_DOMAIN


def cmd_hurwitz(args) -> tuple[dict | None, int]:
    F1 = _load(args.first)
    F2 = _load(args.second)

    if args.replay is not None:
        with open(args.replay, "r", encoding="utf-8") as fh:
            witness = parse_witness(fh.read(), F1.strands)
        if F1.strands != F2.strands:
            raise StrandMismatch(
                f"cannot replay between {F1.strands} and {F2.strands} strands"
            )
        match = replay(F1, witness).normalized() == F2.normalized()
        report = build_replay_report(F1.strands, witness, match)
        return report, EXIT_OK if match else EXIT_DOMAIN

    try:
        verdict = equivalent(
            F1, F2, budget=args.budget, conjugation_radius=args.ball
        )
    except StrandMismatch:
        report = {
            "strands": F1.strands,
            "mode": "search",
            "verdict": "distinguished",
            "invariant": "strands",
            "witness": None,
            "moves": None,
            "search": None,
        }
        return report, EXIT_DOMAIN

    report = build_search_report(F1.strands, verdict)
    if verdict.kind == "equivalent":
        if args.witness is not None:
            with open(args.witness, "w", encoding="utf-8") as fh:
                fh.write(report["witness"])
        return report, EXIT_OK
    if verdict.kind == "distinguished":
        return report, EXIT_DOMAIN
    return report, EXIT_UNKNOWN


def cmd_vk(args) -> tuple[dict | None, int]:
    F = _load(args.file)
    return build_vk_report(F), EXIT_OK


def cmd_enumerate(args) -> tuple[dict | None, int]:
    F = _load(args.file)
    report = build_enumerate_report(F, args.degree, allow_large=args.allow_large)
    return report, EXIT_OK


def cmd_chisini(args) -> tuple[dict | None, int]:
    d = Fraction(args.d)
    if d <= 0 or args.g < 0 or args.c < 0:
        raise ValueError("need d > 0, g >= 0, c >= 0")
    if args.N is not None and args.N < 1:
        raise ValueError("sheet count must be positive")
    report = build_chisini_report(d, args.g, args.c, args.N)
    return report, EXIT_OK if report["applicable"] else EXIT_DOMAIN


def cmd_corpus(args) -> tuple[dict | None, int]:
    if args.name is None:
        return {"names": list(corpus.available())}, EXIT_OK
    sys.stdout.write(corpus.text(args.name))
    return None, EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "structured"),
        default="text",
        help="text lines or one JSON document (default: text)",
    )

    parser = argparse.ArgumentParser(
        prog="braidfact",
        description="verify, compare and enumerate cuspidal factorizations "
        "of the full twist",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "verify",
        parents=[common],
        help="check the factor product against the full twist",
    )
    p.add_argument("file", help=".bfac factorization file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "hurwitz",
        parents=[common],
        help="decide Hurwitz-and-conjugation equivalence of two files",
    )
    p.add_argument("first", help=".bfac factorization file")
    p.add_argument("second", help=".bfac factorization file")
    p.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help=f"search state budget (default: {DEFAULT_BUDGET})",
    )
    p.add_argument(
        "--ball",
        type=int,
        default=DEFAULT_CONJUGATION_RADIUS,
        help="conjugator word-length radius on the target side "
        f"(default: {DEFAULT_CONJUGATION_RADIUS})",
    )
    p.add_argument("--witness", metavar="OUT", help="write the witness to OUT")
    p.add_argument(
        "--replay",
        metavar="WIT",
        help="skip the search: replay WIT on the first file and compare",
    )
    p.set_defaults(func=cmd_hurwitz)

    p = sub.add_parser(
        "vk",
        parents=[common],
        help="fundamental-group presentation, simplification, abelianization",
    )
    p.add_argument("file", help=".bfac factorization file")
    p.set_defaults(func=cmd_vk)

    p = sub.add_parser(
        "enumerate",
        parents=[common],
        help="count symmetric-group cover monodromies up to relabeling",
    )
    p.add_argument("file", help=".bfac factorization file")
    p.add_argument(
        "--degree", type=int, required=True, help="sheet count of the cover"
    )
    p.add_argument(
        "--allow-large",
        action="store_true",
        help="permit sheet counts above the default bound",
    )
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser(
        "chisini",
        parents=[common],
        help="exact degree bound certifying that the branch curve "
        "determines the cover",
    )
    p.add_argument("--d", required=True, help="half-degree, a fraction like 3 or 5/2")
    p.add_argument("--g", required=True, type=int, help="genus")
    p.add_argument("--c", required=True, type=int, help="cusp count")
    p.add_argument("--N", type=int, help="sheet count to test against the bound")
    p.set_defaults(func=cmd_chisini)

    p = sub.add_parser(
        "corpus",
        parents=[common],
        help="list bundled examples, or print one",
    )
    p.add_argument("name", nargs="?", help="example name; omit to list")
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BraidFactError as e:
        # domain errors double as ValueError, so this must come first
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValueError, LookupError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if report is not None:
        _emit(report, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
