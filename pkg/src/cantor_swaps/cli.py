"""Command-line front end.

Exit status: 0 on success, 1 when a check comes out negative (failed
suite, unequal elements, undefined action), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .address import AddressError, format_address, parse_address, set_max_depth
from .algorithms import (
    CONVERT_SOURCES,
    CONVERT_TARGETS,
    SUITE_DESCRIPTIONS,
    SUITES,
    ConversionError,
    DecompositionError,
    convert,
    decompose_swap,
    format_decomposition,
    run_named_suite,
    suite_presentation,
)
from .element import ElementError, act_address, dump, load, parse_pairs, pointwise_equal
from .presentations import UnknownGenerator, evaluate, get_genset, infinite_family_counts
from .treepair import to_tree_pair
from .words import ParseError, format_expr, parse

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CLI_GENSETS = ("abc", "uv", "cfp", "swaps")


class UsageError(Exception):
    pass


def _read(arg: str) -> str:
    return sys.stdin.read() if arg == "-" else arg


def _element(args, text: str):
    return evaluate(parse(_read(text)), get_genset(args.gens))


def cmd_eval(args) -> int:
    print(dump(_element(args, args.expr)))
    return EXIT_OK


def cmd_eq(args) -> int:
    f, g = _element(args, args.lhs), _element(args, args.rhs)
    same = f == g
    if args.pointwise and same != pointwise_equal(f, g):
        raise RuntimeError("canonical and pointwise comparisons disagree")
    if not args.quiet:
        print("equal" if same else "not equal")
    return EXIT_OK if same else EXIT_FAIL


def cmd_canon(args) -> int:
    text = _read(args.table).strip()
    f = load(text) if text.startswith("velement") else parse_pairs(text)
    print(dump(f))
    return EXIT_OK


def cmd_act(args) -> int:
    f = _element(args, args.expr)
    image = act_address(f, parse_address(args.address))
    if image is None:
        print("undefined")
        return EXIT_FAIL
    print(format_address(image))
    return EXIT_OK


def cmd_decompose(args) -> int:
    alpha, beta = parse_address(args.alpha), parse_address(args.beta)
    word = decompose_swap(alpha, beta, cap=args.cap)
    print(format_decomposition(word))
    if not args.quiet:
        print(f"# {len(word)} letters", file=sys.stderr)
    return EXIT_OK


def cmd_convert(args) -> int:
    out = convert(_read(args.expr), args.source, args.target)
    print(format_expr(out))
    return EXIT_OK


def cmd_treepair(args) -> int:
    tp = to_tree_pair(_element(args, args.expr))
    print(tp.render_dot() if args.format == "dot" else tp.render_ascii())
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite != "all":
        try:
            suite_presentation(args.suite)
        except KeyError:
            raise UsageError(f"unknown suite {args.suite!r}; try 'suite-list'") from None
    reports = run_named_suite(args.suite)
    for rep in reports:
        if args.quiet:
            continue
        if args.tsv:
            print(rep.to_tsv())
            continue
        print(rep.to_text())
        if rep.suite.startswith("inf-L"):
            c = infinite_family_counts(suite_presentation(rep.suite))
            print(f"  instances: order={c.order} conjugacy={c.conjugacy} split={c.split}")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def cmd_suite_list(args) -> int:
    for name in SUITES:
        print(f"{name}\t{SUITE_DESCRIPTIONS[name]}")
    print("all\tevery suite above")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a flag given before the subcommand from being reset by it
    common.add_argument("--max-depth", type=int, default=argparse.SUPPRESS, help="address enumeration cap")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="print less; rely on exit status")

    gens = argparse.ArgumentParser(add_help=False)
    gens.add_argument("--gens", default="abc", choices=CLI_GENSETS, help="generating set (default abc)")

    p = argparse.ArgumentParser(
        prog="cantor-swaps",
        description="Elements of Thompson's group V as swaps of Cantor-space cones.",
        parents=[common],
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("eval", parents=[common, gens], help="evaluate a word, print the reduced element")
    s.add_argument("expr", help="word expression, or - for stdin")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("eq", parents=[common, gens], help="decide equality of two words")
    s.add_argument("lhs")
    s.add_argument("rhs")
    s.add_argument("--pointwise", action="store_true", help="cross-check by acting on addresses")
    s.set_defaults(func=cmd_eq)

    s = sub.add_parser("canon", parents=[common], help="reduce a pair table")
    s.add_argument("table", help="'00->10, 01->11, 1->0', a dump, or - for stdin")
    s.set_defaults(func=cmd_canon)

    s = sub.add_parser("act", parents=[common, gens], help="image of an address")
    s.add_argument("expr")
    s.add_argument("address")
    s.set_defaults(func=cmd_act)

    s = sub.add_parser("decompose", parents=[common], help="write <alpha beta> over the four base swaps")
    s.add_argument("alpha")
    s.add_argument("beta")
    s.add_argument("--cap", type=int, default=8, help="maximum address length (default 8)")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("convert", parents=[common], help="rewrite a word over another generating set")
    s.add_argument("expr")
    s.add_argument("--from", dest="source", required=True, choices=CONVERT_SOURCES)
    s.add_argument("--to", dest="target", required=True, choices=CONVERT_TARGETS)
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("treepair", parents=[common, gens], help="draw the reduced tree pair")
    s.add_argument("expr")
    s.add_argument("--format", default="ascii", choices=("ascii", "dot"))
    s.set_defaults(func=cmd_treepair)

    s = sub.add_parser("verify", parents=[common], help="check a relator suite")
    s.add_argument("suite", help="suite name (see suite-list) or all")
    s.add_argument("--tsv", action="store_true", help="print suite<TAB>total<TAB>passed lines")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("suite-list", parents=[common], help="list verification suites")
    s.set_defaults(func=cmd_suite_list)

    s = sub.add_parser("suite", parents=[common], help="suite utilities ('suite list')")
    s.add_argument("action", choices=("list",))
    s.set_defaults(func=cmd_suite_list)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.quiet = getattr(args, "quiet", False)
    args.max_depth = getattr(args, "max_depth", None)
    if args.max_depth is not None:
        if args.max_depth < 0:
            parser.error("--max-depth must be non-negative")
        set_max_depth(args.max_depth)
    try:
        return args.func(args)
    except (
        ParseError,
        AddressError,
        ElementError,
        UnknownGenerator,
        ConversionError,
        DecompositionError,
        UsageError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        set_max_depth(None)


if __name__ == "__main__":
    sys.exit(main())
