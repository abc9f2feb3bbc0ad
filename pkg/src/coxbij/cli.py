"""Command-line front end.

Every subcommand reads one JSON value or a JSON-lines stream and writes one
result per input line.  Exit status: 0 success, 1 verification failure,
2 malformed input or usage, 3 domain error (not an antichain, not a
canonical noncrossing element, ...).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterator

from .bijection import f_map, g_map, l_map
from .enumeration import catalan_count, enumerate_antichains, enumerate_nc, verify_bijection
from .errors import CoxbijError
from .partitions import (
    ArcPartition,
    SignedPermutation,
    antichain_to_nonnesting,
    ground_labels,
    partition_arcs,
    permutation_to_partition,
)
from .roots import RootSystemId, antichain_from_json, antichain_to_json, format_antichain

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_DOMAIN = 0, 1, 2, 3


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# arc diagrams
# ---------------------------------------------------------------------------


def _arc_levels(arcs, pos):
    """Assign each arc the lowest row clear of every shorter arc it touches."""
    placed = []
    for a, b in sorted(arcs, key=lambda arc: (pos[arc[1]] - pos[arc[0]], pos[arc[0]])):
        lo, hi = pos[a], pos[b]
        level = 1 + max((lv for (x, y), lv in placed if not (y < lo or hi < x)), default=0)
        placed.append(((lo, hi), level))
    return placed


def render_diagram(p: ArcPartition, style: str | None = None) -> str:
    """Monospace arc diagram: arcs drawn above a row of ground labels."""
    style = style or p.style
    labels = ground_labels(p.family, p.n, style)
    pos = {x: i for i, x in enumerate(labels)}
    width = max(len(str(x)) for x in labels) + 1
    ncols = width * len(labels)

    def anchor(i):
        return i * width + width - 1

    placed = _arc_levels(partition_arcs(p, style), pos)
    height = max((lv for _, lv in placed), default=0)
    grid = [[" "] * ncols for _ in range(height)]
    for (lo, hi), level in placed:
        row = grid[height - level]
        for c in range(anchor(lo) + 1, anchor(hi)):
            if row[c] == " ":
                row[c] = "-"
        row[anchor(lo)] = row[anchor(hi)] = "+"
    for (lo, hi), level in placed:
        for below in range(1, level):
            row = grid[height - below]
            for c in (anchor(lo), anchor(hi)):
                row[c] = "+" if row[c] == "+" else "|"
    lines = ["".join(r).rstrip() for r in grid]
    lines.append("".join(str(x).rjust(width) for x in labels).rstrip())
    return "\n".join(lines)


def diagram_arcs(text: str, family: str, n: int, style: str) -> list:
    """Recover the arc list from a diagram drawn by :func:`render_diagram`."""
    labels = ground_labels(family, n, style)
    width = max(len(str(x)) for x in labels) + 1
    by_anchor = {i * width + width - 1: x for i, x in enumerate(labels)}
    arcs = []
    for line in text.splitlines()[:-1]:
        c = 0
        while c < len(line):
            if line[c] == "+" and c + 1 < len(line) and line[c + 1] == "-":
                end = c + 1
                while line[end] in "-|":
                    end += 1
                arcs.append((by_anchor[c], by_anchor[end]))
                c = end
            else:
                c += 1
    pos = {x: i for i, x in enumerate(labels)}
    return sorted(arcs, key=lambda arc: (pos[arc[0]], pos[arc[1]]))


# ---------------------------------------------------------------------------
# input handling
# ---------------------------------------------------------------------------


def _read_values(source: str | None, stdin) -> Iterator:
    if source is None or source == "-":
        text = stdin.read()
    elif source.lstrip().startswith(("[", "{")):
        text = source
    elif os.path.exists(source):
        with open(source) as fh:
            text = fh.read()
    else:
        raise InputError(f"input {source!r} is neither a file nor a JSON value")
    text = text.strip()
    if not text:
        raise InputError("no input")
    try:
        yield json.loads(text)
        return
    except json.JSONDecodeError:
        pass
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.strip():
            try:
                yield json.loads(line)
            except json.JSONDecodeError as exc:
                raise InputError(f"line {lineno}: {exc}") from exc


def _system(args, required=True) -> RootSystemId | None:
    try:
        return _system_unchecked(args, required)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _system_unchecked(args, required):
    if args.n is not None:
        if args.rank is not None:
            raise InputError("give --rank or -n, not both")
        family = args.family or "A"
        rank = args.n - 1 if family == "A" else args.n
        return RootSystemId(family, rank)
    if args.rank is None or args.family is None:
        if required:
            raise InputError("--family and --rank (or -n) are required")
        return None
    return RootSystemId(args.family, args.rank)


def _parse_antichain(value, system):
    if isinstance(value, dict) and "antichain" in value:
        value = value["antichain"]
    if not isinstance(value, list):
        raise InputError("expected a JSON list of roots")
    try:
        antichain = antichain_from_json(value, system)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed root: {exc}") from exc
    if system is None:
        if not antichain:
            raise InputError("--family and --rank are required for the empty antichain")
        system = antichain[0].system
    return antichain, system


def _parse_permutation(value, family):
    if isinstance(value, dict) and "permutation" in value:
        value = value["permutation"]
    if not isinstance(value, dict) or "cycles" not in value or "n" not in value:
        raise InputError('expected {"n": ..., "cycles": [...]}')
    try:
        return SignedPermutation.from_json(value, family)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed permutation: {exc}") from exc


def _parse_partition(value, system, style):
    """Accept a partition object, an antichain (its nonnesting partition) or a permutation."""
    if isinstance(value, dict) and "partition" in value:
        value = value["partition"]
    if isinstance(value, list) or (isinstance(value, dict) and "antichain" in value):
        antichain, system = _parse_antichain(value, system)
        p = antichain_to_nonnesting(antichain, system)
    elif isinstance(value, dict) and "blocks" in value:
        try:
            p = ArcPartition.from_json(value, style or "nc")
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed partition: {exc}") from exc
    elif isinstance(value, dict) and ("cycles" in value or "permutation" in value):
        p = permutation_to_partition(_parse_permutation(value, system.family if system else None))
    else:
        raise InputError("expected a partition, antichain or permutation")
    return p.with_style(style) if style else p


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _dump(obj) -> str:
    return json.dumps(obj)


def cmd_enumerate(args, stdin, out):
    system = _system(args)
    if args.kind == "nn":
        for a in enumerate_antichains(system):
            print(_dump(antichain_to_json(a)) if args.format == "json" else format_antichain(a), file=out)
    else:
        for p in enumerate_nc(system):
            print(_dump(p.to_json()) if args.format == "json" else str(p), file=out)
    return EXIT_OK


def cmd_map(args, stdin, out):
    system = _system(args, required=False)
    for value in _read_values(args.input, stdin):
        antichain, sys_ = _parse_antichain(value, system)
        word = f_map(antichain, sys_)
        w = word.product()
        part = word.partition()
        if args.format == "json":
            print(
                _dump(
                    {
                        "antichain": antichain_to_json(antichain),
                        "word": word.to_json(),
                        "cycles": str(w),
                        "permutation": w.to_json(),
                        "partition": part.to_json(),
                    }
                ),
                file=out,
            )
        else:
            print(f"antichain: {format_antichain(antichain)}", file=out)
            print(f"word:      {word}", file=out)
            print(f"product:   {w}", file=out)
            print(f"partition: {part}", file=out)
    return EXIT_OK


def cmd_invert(args, stdin, out):
    system = _system(args, required=False)
    for value in _read_values(args.input, stdin):
        p = _parse_permutation(value, system.family if system else args.family)
        antichain = g_map(p)
        print(_dump(antichain_to_json(antichain)) if args.format == "json" else format_antichain(antichain), file=out)
    return EXIT_OK


def cmd_lmap(args, stdin, out):
    system = _system(args, required=False)
    if system is not None and system.family != "A":
        raise InputError("the L-map is defined for type A only")
    for value in _read_values(args.input, stdin):
        p = _parse_partition(value, system, "nn")
        if p.family != "A":
            raise InputError("the L-map is defined for type A only")
        q = l_map(p)
        print(_dump(q.to_json()) if args.format == "json" else str(q), file=out)
    return EXIT_OK


def cmd_render(args, stdin, out):
    system = _system(args, required=False)
    for value in _read_values(args.input, stdin):
        p = _parse_partition(value, system, args.style)
        print(render_diagram(p), file=out)
    return EXIT_OK


def cmd_verify(args, stdin, out):
    system = _system(args)
    report = verify_bijection(system)
    if args.format == "json":
        print(_dump(report.to_json()), file=out)
    else:
        data = report.to_json()
        for key, val in data.items():
            if isinstance(val, list):
                print(f"{key}: {len(val)}", file=out)
                for item in val:
                    print(f"  {item}", file=out)
            else:
                print(f"{key}: {val}", file=out)
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_count(args, stdin, out):
    system = _system(args)
    print(catalan_count(system), file=out)
    return EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "map": cmd_map,
    "invert": cmd_invert,
    "lmap": cmd_lmap,
    "render": cmd_render,
    "verify": cmd_verify,
    "count": cmd_count,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=["A", "B"], type=str.upper)
    common.add_argument("--rank", type=int, help="number of simple roots (A_k acts on [k+1])")
    common.add_argument("-n", type=int, help="ground set size; converted to a rank")
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--input", help="path, '-' for stdin, or an inline JSON value")

    parser = argparse.ArgumentParser(prog="coxbij", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    en = sub.add_parser("enumerate", parents=[common], help="list all nonnesting or noncrossing objects")
    en.add_argument("--kind", choices=["nn", "nc"], default="nn")
    sub.add_parser("map", parents=[common], help="apply f to antichains")
    sub.add_parser("invert", parents=[common], help="apply g to noncrossing elements")
    sub.add_parser("lmap", parents=[common], help="apply the L-map (type A)")
    rd = sub.add_parser("render", parents=[common], help="draw an arc diagram")
    rd.add_argument("--style", choices=["nn", "nc"])
    sub.add_parser("verify", parents=[common], help="exhaustively check the bijection")
    sub.add_parser("count", parents=[common], help="print the Catalan count")
    return parser


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, stdin, stdout)
    except InputError as exc:
        print(f"coxbij: {exc}", file=stderr)
        return EXIT_INPUT
    except CoxbijError as exc:
        print(_dump({"error": type(exc).__name__, "message": str(exc)}), file=stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        # validation failures raised while building roots/permutations from input
        print(_dump({"error": type(exc).__name__, "message": str(exc)}), file=stderr)
        return EXIT_DOMAIN


def main():
    sys.exit(run())
