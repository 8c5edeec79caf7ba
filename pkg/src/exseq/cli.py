"""Command line interface: ``exseq {count,enumerate,verify,mutate,render}``.

Exit codes: 0 success, 1 verification or domain failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, TextIO

from .bijection import tree_of_sequence
from .chords import NCTree, count_nc_trees, enumerate_nc_trees, is_nc_spanning_tree, nc_tree_count
from .errors import NotExceptionalError
from .mutation import braid_trace, parse_braid_word
from .render import render_svg
from .sequences import (
    ExceptionalSequence,
    class_key_json,
    count_complete_sequences,
    enumerate_complete_sequences,
    group_by_class,
    require_complete_exceptional,
    sequence_count,
)
from .verify import SUITE_BOUNDS, SUITES, run_suites

ENUM_BOUNDS = {"trees": 9, "sequences": 7, "classes": 7}


class DomainError(Exception):
    pass


def _common(parser: argparse.ArgumentParser, formats: tuple[str, ...], default_format: str) -> None:
    parser.add_argument("--n", type=int, help="rank of the quiver (circle has n+1 points)")
    parser.add_argument("--format", choices=formats, default=default_format)
    parser.add_argument("--out", type=Path, help="write output here instead of standard output")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")
    parser.add_argument("--seed-order", action="store_true", help="reserved; output order is always canonical")
    parser.add_argument("--unsafe-large", action="store_true", help="lift the documented n bounds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exseq",
        description="Exceptional sequences over the linear quiver and non-crossing spanning trees.",
        epilog="exit codes: 0 success, 1 verification or domain failure, 2 usage error",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="closed-form counts of classes/trees and sequences")
    _common(p, ("text", "json"), "text")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int)
    p.add_argument(
        "--enumerate",
        action="store_true",
        help=f"add brute-force columns (trees n<={ENUM_BOUNDS['trees']}, sequences n<={ENUM_BOUNDS['sequences']})",
    )

    p = sub.add_parser(
        "enumerate",
        help="stream trees, sequences or classes",
        description="bounds: " + ", ".join(f"{k} n<={v}" for k, v in ENUM_BOUNDS.items()),
    )
    _common(p, ("lines", "json", "text"), "lines")
    p.add_argument("--kind", choices=("trees", "sequences", "classes"), default="trees")

    p = sub.add_parser(
        "verify",
        help="run exhaustive verification suites",
        description="suite bounds: " + ", ".join(f"{k} n<={v}" for k, v in SUITE_BOUNDS.items()),
    )
    _common(p, ("json", "text"), "json")
    p.add_argument(
        "--suite",
        action="append",
        help="suite name or comma list (default: all of " + ",".join(SUITES) + ")",
    )

    p = sub.add_parser("mutate", help="apply a braid/shift word to a sequence")
    _common(p, ("json", "text"), "json")
    p.add_argument("--seq", required=True, help="sequence JSON, a path, or - for stdin")
    p.add_argument("--word", default="", help='e.g. "s1 s2\' t3"')

    p = sub.add_parser("render", help="SVG chord diagram of a tree or sequence")
    _common(p, ("svg",), "svg")
    p.add_argument("--input", required=True, help="tree or sequence JSON, a path, or - for stdin")
    return parser


def _load_json(text: str) -> dict:
    if text == "-":
        return json.load(sys.stdin)
    stripped = text.lstrip()
    if stripped.startswith(("{", "[")):
        return json.loads(text)
    return json.loads(Path(text.lstrip("@")).read_text())


def _emit(args, out: TextIO, rows, fmt: str) -> None:
    if fmt == "json":
        json.dump(list(rows), out)
        out.write("\n")
    else:
        for row in rows:
            out.write((json.dumps(row) if fmt == "lines" else str(row)) + "\n")


def _need_n(parser, args) -> int:
    if args.n is None or args.n < 1:
        parser.error("--n must be given and >= 1")
    return args.n


def _bound(parser, args, n: int, bound: int, what: str, blowup: int) -> None:
    if n <= bound:
        return
    if not args.unsafe_large:
        parser.error(f"{what} is bounded to n<={bound}; pass --unsafe-large to override")
    print(f"warning: {what} at n={n} visits about {blowup} objects", file=sys.stderr)


def cmd_count(parser, args, out: TextIO) -> int:
    lo = args.n_min if args.n is None else args.n
    hi = args.n_max if args.n_max is not None else lo
    if lo < 1 or hi < lo:
        parser.error(f"invalid range n_min={lo} n_max={hi}")
    rows = []
    for n in range(lo, hi + 1):
        row = {"n": n, "nc_tree_count": nc_tree_count(n), "sequence_count": sequence_count(n)}
        if args.enumerate:
            row["enumerated_trees"] = count_nc_trees(n) if n <= ENUM_BOUNDS["trees"] else None
            row["enumerated_sequences"] = count_complete_sequences(n) if n <= ENUM_BOUNDS["sequences"] else None
        rows.append(row)
    if args.format == "json":
        json.dump(rows, out)
        out.write("\n")
    else:
        cols = list(rows[0])
        out.write("\t".join(cols) + "\n")
        for row in rows:
            out.write("\t".join("-" if row[c] is None else str(row[c]) for c in cols) + "\n")
    return 0


def cmd_enumerate(parser, args, out: TextIO) -> int:
    n = _need_n(parser, args)
    kind = args.kind
    blowup = nc_tree_count(n) if kind == "trees" else sequence_count(n)
    _bound(parser, args, n, ENUM_BOUNDS[kind], f"enumerate {kind}", blowup)
    if kind == "trees":
        rows = (t.to_json() for t in enumerate_nc_trees(n, jobs=args.jobs))
    elif kind == "sequences":
        rows = (s.to_json() for s in enumerate_complete_sequences(n, jobs=args.jobs))
    else:
        groups = group_by_class(enumerate_complete_sequences(n, jobs=args.jobs))
        rows = (
            {"n": n, "class": class_key_json(key), "tree": tree_of_sequence(members[0]).to_json()}
            for key, members in sorted(groups.items())
        )
    _emit(args, out, rows, args.format)
    return 0


def cmd_verify(parser, args, out: TextIO) -> int:
    n = _need_n(parser, args)
    suites: list[str] = []
    for item in args.suite or ["all"]:
        for name in item.split(","):
            name = name.strip()
            if name == "all":
                suites.extend(SUITES)
            elif name in SUITES:
                suites.append(name)
            else:
                parser.error(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    suites = list(dict.fromkeys(suites))
    for name in suites:
        _bound(parser, args, n, SUITE_BOUNDS[name], f"suite {name}", sequence_count(n))
    result = run_suites(n, suites, jobs=args.jobs)
    if args.format == "json":
        json.dump(result.to_json(), out, indent=2)
        out.write("\n")
    else:
        for c in result.checks:
            out.write(f"{'PASS' if c.passed else 'FAIL'} {c.suite}/{c.name} {c.detail}\n")
            for f in c.failures:
                out.write(f"    {f}\n")
    return 0 if result.passed else 1


def cmd_mutate(parser, args, out: TextIO) -> int:
    try:
        seq = ExceptionalSequence.from_json(_load_json(args.seq))
        word = parse_braid_word(args.word, seq.n)
    except (ValueError, KeyError, OSError) as exc:
        parser.error(f"bad input: {exc}")
    require_complete_exceptional(seq)
    steps = braid_trace(word, seq)
    result = steps[-1].sequence if steps else seq
    if args.format == "json":
        doc = {
            "input": seq.to_json(),
            "word": args.word,
            "steps": [s.to_json() for s in steps],
            "result": result.to_json(),
        }
        json.dump(doc, out)
        out.write("\n")
    else:
        out.write(f"start {seq!r}\n")
        for s in steps:
            out.write(f"{s.letter!s:>5} [{s.case.value if s.case else 'shift'}] {s.sequence!r}\n")
    return 0


def cmd_render(parser, args, out: TextIO) -> int:
    try:
        data = _load_json(args.input)
    except (ValueError, OSError) as exc:
        parser.error(f"bad input: {exc}")
    if "objects" in data:
        tree = tree_of_sequence(ExceptionalSequence.from_json(data))
    else:
        tree = NCTree.from_json(data)
        check = is_nc_spanning_tree(tree.chords, tree.n)
        if not check:
            raise DomainError(f"not a non-crossing spanning tree ({check.reason}): {check.detail}")
    out.write(render_svg(tree))
    return 0


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "mutate": cmd_mutate,
    "render": cmd_render,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    out = open(args.out, "w", encoding="utf-8", newline="\n") if args.out else sys.stdout
    try:
        return COMMANDS[args.command](parser, args, out)
    except NotExceptionalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        if args.out:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
