"""Command-line entry point: ``theta-symbols <command> ...``."""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .correspond import first_occurrence
from .render import (
    dump_json,
    enum_data,
    render_enum,
    render_first_occ,
    render_table,
    render_theta_set,
    table_data,
    theta_set_data,
)
from .symbols import format_symbol, in_group, parse_group, parse_symbol
from .theta import parse_pair
from .verify import PROPERTIES, run_property, verify_table_file

MARKERS = """\
markers in plain output:
  !max  maximal order in the whole Θ-set (a natural sign in print)
  *sel  the overline-theta image of the source (overlined in print)
  ~cut  already consumed by an earlier source (struck out in print)
symbols are written top;bottom with comma-separated rows, '-' for an empty row."""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep exit code 2 but raise so main() can format it
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "json", "csv"), default="plain")

    p = _Parser(
        prog="theta-symbols",
        description="Symbol combinatorics for the finite theta correspondence of unipotent characters.",
        epilog=MARKERS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("enum", parents=[fmt], help="list S_{n,delta} in the eps-linear order")
    e.add_argument("--group", required=True, help="e.g. O+8, O-6, Sp10")
    e.add_argument("--delta", type=int, required=True)
    e.add_argument("--eps", choices=("+", "-"), help="order type (default: + unless the group is O-)")

    t = sub.add_parser("theta-set", parents=[fmt], help="Θ-set of one symbol, split into blocks",
                       epilog=MARKERS, formatter_class=argparse.RawDescriptionHelpFormatter)
    t.add_argument("--pair", required=True, help="ordered pair G1,G2, e.g. O+8,Sp10")
    t.add_argument("--symbol", required=True, help="a symbol of G1, e.g. '4;0'")

    tb = sub.add_parser("table", parents=[fmt], help="correspondence table of a pair",
                        epilog=MARKERS, formatter_class=argparse.RawDescriptionHelpFormatter)
    tb.add_argument("--pair", required=True)
    tb.add_argument("--delta", type=int, help="restrict to one defect (default: every family of G1)")

    f = sub.add_parser("first-occ", parents=[fmt], help="first-occurrence indices of a symbol")
    f.add_argument("--symbol", required=True)
    f.add_argument("--series", required=True, choices=("Sp", "O+", "O-"),
                   help="Witt series of the partner group")

    v = sub.add_parser("verify", parents=[fmt], help="run a property sweep")
    v.add_argument("--property", required=True, choices=sorted(PROPERTIES), metavar="ID",
                   help="one of: " + ", ".join(sorted(PROPERTIES)))
    v.add_argument("--max-rank", type=int, default=4,
                   help="first-member half rank bound; the partner goes to twice this")
    v.add_argument("--table", help="JSON table file to check instead of a fresh sweep (L0430 only)")
    return p


def _run(args) -> int:
    out = sys.stdout
    if args.command == "enum":
        g = parse_group(args.group)
        if args.delta % 4 != g.residue:
            raise UsageError(f"defect {args.delta} does not belong to {g}")
        eps = {"+": 1, "-": -1}.get(args.eps, -1 if g.kind == "O-" else 1)
        out.write(render_enum(enum_data(g, args.delta, eps), args.format))
        return 0
    if args.command == "theta-set":
        pair = parse_pair(args.pair)
        s = parse_symbol(args.symbol)
        if not in_group(s, pair.first):
            raise UsageError(f"{format_symbol(s)} is not a symbol of {pair.first}")
        out.write(render_theta_set(theta_set_data(s, pair), args.format))
        return 0
    if args.command == "table":
        pair = parse_pair(args.pair)
        if args.delta is not None and args.delta % 4 != pair.first.residue:
            raise UsageError(f"defect {args.delta} does not belong to {pair.first}")
        data = table_data(pair, args.delta, with_blocks=args.format == "plain")
        out.write(render_table(data, args.format))
        return 0
    if args.command == "first-occ":
        s = parse_symbol(args.symbol)
        data = {"symbol": format_symbol(s), "series": args.series}
        for mode in ("theta", "underline", "overline"):
            data[mode] = first_occurrence(s, args.series, mode)
        out.write(render_first_occ(data, args.format))
        return 0
    if args.command == "verify":
        if args.table:
            if args.property != "L0430":
                raise UsageError("--table is only meaningful with --property L0430")
            rep = verify_table_file(args.table)
        else:
            rep = run_property(args.property, args.max_rank)
        if args.format == "json":
            out.write(dump_json({"property": args.property, "checked": rep.checked,
                                 "violations": rep.violations}))
        else:
            out.write(rep.summary() + "\n")
            for line in rep.violations[:50]:
                out.write(f"  {line}\n")
        return 0 if rep.ok else 1
    raise UsageError(f"unknown command {args.command}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except (UsageError, ValueError, KeyError) as exc:
        print(f"theta-symbols: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"theta-symbols: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
