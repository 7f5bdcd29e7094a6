"""Streaming command-line frontend over line-oriented Graph6/Sparse6 text.

Streams carry one graph per line.  An optional leading ``>>graph6<<`` or
``>>sparse6<<`` header is stripped at ingestion; every other line must
decode, and failures abort with the 1-based line number.  Exit codes: 0 for
success (and a true ``iso`` answer), 1 for a false ``iso`` answer, 2 for
usage or data errors.

The ``repro`` subcommand regenerates the reference tables: graph counts
(a000088), forests among bipartite graphs (a005195), trees (a000055), and
the random-graph connectivity experiment around the p = log(n)/n threshold
(natural logarithm).  The vertex cap can be overridden with the
``GCANON_VERTEX_CAP`` environment variable.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from typing import IO, Iterable, Iterator, NoReturn

from . import canon, codec, core, filters, generate


def census_counts(max_n: int) -> list[int]:
    """Non-isomorphic graph counts for n = 1..max_n."""
    return [len(generate.generate_graphs(n)) for n in range(1, max_n + 1)]


def forest_counts(max_n: int) -> list[int]:
    """Forests among bipartite graphs (acyclic classes) for n = 1..max_n."""
    forest = filters.build_graph_filter([("NumCycles", 0)])
    return [
        len(filters.filter_graphs(generate.generate_graphs(n, generate.GenOptions(only_bipartite=True)), forest))
        for n in range(1, max_n + 1)
    ]


def tree_counts(max_n: int) -> list[int]:
    """Trees (acyclic and not 0-connected) for n = 1..max_n."""
    tree = filters.build_graph_filter(
        [("NumCycles", 0), ("Connectivity", 0), ("NegateConnectivity", True)]
    )
    return [
        len(filters.filter_graphs(generate.generate_graphs(n, generate.GenOptions(only_bipartite=True)), tree))
        for n in range(1, max_n + 1)
    ]


def er_connectivity_rows(max_n: int, trials: int, seed: int) -> tuple[list[int], list[int]]:
    """Connected-sample counts at p = 2 log(n)/n and p = log(n)/(2n), n = 2..max_n."""
    connected = filters.build_graph_filter([("Connectivity", 0), ("NegateConnectivity", True)])
    high = []
    low = []
    for n in range(2, max_n + 1):
        p = math.log(n) / n
        for p_scaled, out in ((2 * p, high), (p / 2, low)):
            samples = generate.generate_random_graphs(generate.RandomModel(n, trials, p_scaled, seed))
            out.append(len(filters.filter_graphs(samples, connected)))
    return high, low


def format_tuple(values: Iterable[int]) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def _fail(message: str, code: int = 2) -> NoReturn:
    print(f"gcanon: {message}", file=sys.stderr)
    raise SystemExit(code)


def _graph_lines(stream: IO[str]) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")
        if lineno == 1:
            stripped_header = False
            for header in (">>graph6<<", ">>sparse6<<"):
                if line.startswith(header):
                    line = line[len(header) :]
                    stripped_header = True
                    break
            if stripped_header and not line:
                continue
        yield lineno, line


def _decode_line(lineno: int, line: str) -> core.Graph:
    try:
        return codec.decode(line)
    except ValueError as exc:
        _fail(f"line {lineno}: {exc}")


def _cmd_gen(args: argparse.Namespace, out: IO[str]) -> int:
    if args.n < 1:
        _fail("zero-vertex graphs are not supported")
    opts = generate.GenOptions(
        only_connected=args.connected,
        only_bipartite=args.bipartite,
        min_edges=args.min_edges,
        max_edges=args.max_edges,
    )
    for line in generate.generate_graphs(args.n, opts):
        out.write(line + "\n")
    return 0


def _cmd_rand(args: argparse.Namespace, out: IO[str]) -> int:
    model = generate.RandomModel(args.n, args.count, args.p, args.seed)
    for graph in generate.generate_random_graphs(model):
        out.write(codec.encode_graph6(graph) + "\n")
    return 0


def _cmd_label(args: argparse.Namespace, stdin: IO[str], out: IO[str]) -> int:
    for lineno, line in _graph_lines(stdin):
        graph = _decode_line(lineno, line)
        out.write(codec.graph6_from_key(graph.n, canon._canon_key(graph.n, graph.rows)) + "\n")
    return 0


def _cmd_short(args: argparse.Namespace, stdin: IO[str], out: IO[str]) -> int:
    seen: set[tuple[int, int]] = set()
    for lineno, line in _graph_lines(stdin):
        graph = _decode_line(lineno, line)
        key = (graph.n, canon._canon_key(graph.n, graph.rows))
        if key not in seen:
            seen.add(key)
            out.write(line + "\n")
    return 0


def _cmd_pick(args: argparse.Namespace, stdin: IO[str], out: IO[str], count_only: bool) -> int:
    graph_filter = filters.parse_filter_spec(args.filter)
    matched = 0
    for lineno, line in _graph_lines(stdin):
        graph = _decode_line(lineno, line)
        try:
            keep = filters.evaluate(graph_filter, graph)
        except ValueError as exc:
            _fail(f"line {lineno}: {exc}")
        if keep:
            matched += 1
            if not count_only:
                out.write(line + "\n")
    if count_only:
        out.write(f"{matched}\n")
    return 0


def _cmd_iso(args: argparse.Namespace, out: IO[str]) -> int:
    try:
        g = codec.decode(args.g6a)
        h = codec.decode(args.g6b)
        answer = canon.are_isomorphic(g, h)
    except ValueError as exc:
        _fail(str(exc))
    out.write("true\n" if answer else "false\n")
    return 0 if answer else 1


def _cmd_repro(args: argparse.Namespace, out: IO[str]) -> int:
    name = args.experiment
    if name == "a000088":
        max_n = args.max_n if args.max_n is not None else 9
        out.write(format_tuple(census_counts(max_n)) + "\n")
    elif name == "a005195":
        max_n = args.max_n if args.max_n is not None else 12
        out.write(format_tuple(forest_counts(max_n)) + "\n")
    elif name == "a000055":
        max_n = args.max_n if args.max_n is not None else 12
        out.write(format_tuple(tree_counts(max_n)) + "\n")
    else:  # er-connectivity; argparse restricts the choices
        max_n = args.max_n if args.max_n is not None else 30
        high, low = er_connectivity_rows(max_n, args.trials, args.seed)
        out.write(f"# connected out of {args.trials} at p = 2 log(n)/n, n = 2..{max_n}\n")
        out.write(format_tuple(high) + "\n")
        out.write(f"# connected out of {args.trials} at p = log(n)/(2 n), n = 2..{max_n}\n")
        out.write(format_tuple(low) + "\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcanon",
        description="Canonical labelling, generation, and filtering of graphs in Graph6/Sparse6 streams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate all non-isomorphic graphs on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--min-edges", type=int, default=None, metavar="A")
    p.add_argument("--max-edges", type=int, default=None, metavar="B")

    p = sub.add_parser("rand", help="sample random graphs with edge probability p")
    p.add_argument("n", type=int)
    p.add_argument("count", type=int)
    p.add_argument("p", type=float)
    p.add_argument("--seed", type=int, default=0)

    sub.add_parser("label", help="replace each stdin graph by its canonical Graph6")
    sub.add_parser("short", help="drop isomorphic duplicates from stdin, keeping first occurrences")

    p = sub.add_parser("pick", help="write stdin graphs matching the filter")
    p.add_argument("--filter", default="", metavar="SPEC")
    p = sub.add_parser("count", help="count stdin graphs matching the filter")
    p.add_argument("--filter", default="", metavar="SPEC")

    p = sub.add_parser("iso", help="test two graph strings for isomorphism")
    p.add_argument("g6a")
    p.add_argument("g6b")

    p = sub.add_parser("repro", help="reprint a reference table")
    p.add_argument(
        "experiment",
        choices=["a000088", "a005195", "a000055", "er-connectivity"],
    )
    p.add_argument("--max-n", type=int, default=None, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    return parser


def _apply_cap_override() -> None:
    raw = os.environ.get("GCANON_VERTEX_CAP")
    if raw is None:
        return
    try:
        cap = int(raw)
        if cap < 1:
            raise ValueError
    except ValueError:
        _fail(f"GCANON_VERTEX_CAP must be a positive integer, got {raw!r}")
    core.VERTEX_CAP = cap


def main(argv: list[str] | None = None, stdin: IO[str] | None = None, stdout: IO[str] | None = None) -> int:
    _apply_cap_override()
    args = _build_parser().parse_args(argv)
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    try:
        if args.command == "gen":
            return _cmd_gen(args, stdout)
        if args.command == "rand":
            return _cmd_rand(args, stdout)
        if args.command == "label":
            return _cmd_label(args, stdin, stdout)
        if args.command == "short":
            return _cmd_short(args, stdin, stdout)
        if args.command == "pick":
            return _cmd_pick(args, stdin, stdout, count_only=False)
        if args.command == "count":
            return _cmd_pick(args, stdin, stdout, count_only=True)
        if args.command == "iso":
            return _cmd_iso(args, stdout)
        return _cmd_repro(args, stdout)
    except BrokenPipeError:
        return 0
    except ValueError as exc:
        _fail(str(exc))


if __name__ == "__main__":
    raise SystemExit(main())
