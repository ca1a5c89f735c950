"""Command line front end.

Exit codes: 0 success, 1 a negative answer (verification failed, no
witness), 2 bad input, 3 an internal self-check failed.
"""

from __future__ import annotations

import argparse
import sys

from . import classes, construction, operations
from .graphs import Graph, format_edge, format_graph, parse_graph, to_dot
from .representation import brute_force_find_pair, decode, min_uniformity, verify
from .words import WordPair, format_word, parse_word

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InternalError(RuntimeError):
    pass


def _word(text: str, tokens: bool):
    return tuple(text.split()) if tokens else parse_word(text)


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path) as fh:
        return parse_graph(fh.read())


def render_graph(g: Graph, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(g)
    if fmt == "graph":
        return format_graph(g)
    lines = ["# vertices: " + " ".join(g.sorted_vertices())]
    lines += [format_edge(e) for e in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def render_pair(pair: WordPair, tokens: bool) -> str:
    w, v = pair.format(True if tokens else None)
    return f"{w}\n{v}\n"


def cmd_decode(args) -> int:
    pair = WordPair(_word(args.w, args.tokens), _word(args.v, args.tokens))
    sys.stdout.write(render_graph(decode(pair), args.format))
    return EXIT_OK


def cmd_represent(args) -> int:
    g = _read_graph(args.graph)
    if args.method == "naive":
        pair = construction.construct_naive(g)
    else:
        pair = construction.construct_colored(g, exact=args.exact)
    if not verify(g, pair):
        raise InternalError("constructed pair does not represent the input graph")
    sys.stdout.write(render_pair(pair, args.tokens))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    pair = WordPair(_word(args.w, args.tokens), _word(args.v, args.tokens))
    res = verify(g, pair)
    if res.ok:
        print("OK")
        return EXIT_OK
    print("FAIL")
    if res.structural:
        print(res.structural)
    for m in res.mismatches:
        print(m)
    return EXIT_FALSE


def cmd_ops(args) -> int:
    ops = args.operands
    t = args.tokens
    if args.op in ("join", "union"):
        if len(ops) != 4:
            raise ValueError(f"{args.op} takes four words: w v w' v'")
        p = WordPair(_word(ops[0], t), _word(ops[1], t))
        q = WordPair(_word(ops[2], t), _word(ops[3], t))
        out = operations.join_pairs(p, q) if args.op == "join" else operations.union_pairs(p, q)
    else:
        if len(ops) != 3:
            raise ValueError(f"{args.op} takes two words and a letter: w v x")
        p = WordPair(_word(ops[0], t), _word(ops[1], t))
        fn = operations.add_universal_vertex if args.op == "add-universal" else operations.add_isolated_vertex
        out = fn(p, ops[2])
    sys.stdout.write(render_pair(out, t))
    return EXIT_OK


def cmd_classes(args) -> int:
    arg = args.argument
    if args.cls == "permutation":
        pair = classes.permutation_words(arg)
    elif args.cls == "cograph":
        pair = classes.cograph_words(classes.parse_cotree(arg))
    elif args.cls == "cycle":
        try:
            n = int(arg)
        except ValueError:
            raise ValueError(f"cycle length must be an integer, got {arg!r}") from None
        pair = classes.cycle_words(n)
    else:
        pair = classes.twelve_to_pair(_word(arg, args.tokens))
    sys.stdout.write(render_pair(pair, args.tokens))
    if args.show_graph:
        sys.stdout.write(render_graph(decode(pair), args.format))
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _read_graph(args.graph)
    if args.k is not None:
        res = brute_force_find_pair(g, args.k, args.budget)
    else:
        res = min_uniformity(g, args.k_max, args.budget)
    print(res.report())
    if res.witness is not None:
        if not verify(g, res.witness.pair):
            raise InternalError("oracle witness does not verify")
        sys.stdout.write(res.witness.to_text())
        return EXIT_OK
    return EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="piwords", description="Graphs represented by pairs of words via projections."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def tokens_flag(p):
        p.add_argument("--tokens", action="store_true", help="words are whitespace-separated tokens")

    def format_flag(p):
        p.add_argument("--format", choices=("edges", "graph", "dot"), default="edges")

    p = sub.add_parser("decode", help="print the graph represented by two words")
    p.add_argument("w")
    p.add_argument("v")
    tokens_flag(p)
    format_flag(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("represent", help="construct two words for a graph file")
    p.add_argument("graph", help="graph file, or - for stdin")
    p.add_argument("--method", choices=("naive", "colored"), default="colored")
    p.add_argument("--exact", action="store_true", help="optimal edge colouring (at most 8 vertices)")
    tokens_flag(p)
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("verify", help="check that two words represent a graph file")
    p.add_argument("graph")
    p.add_argument("w")
    p.add_argument("v")
    tokens_flag(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ops", help="join, union or vertex insertion on word pairs")
    p.add_argument("op", choices=("join", "union", "add-universal", "add-isolated"))
    p.add_argument("operands", nargs="+")
    tokens_flag(p)
    p.set_defaults(func=cmd_ops)

    p = sub.add_parser("classes", help="word pairs for special graph classes")
    p.add_argument("cls", choices=("permutation", "cograph", "cycle", "12rep"))
    p.add_argument("argument", help="one-line permutation, cotree, cycle length or 12-representing word")
    p.add_argument("--show-graph", action="store_true", help="also print the represented graph")
    tokens_flag(p)
    format_flag(p)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("oracle", help="exhaustive search for k-uniform representations")
    p.add_argument("graph")
    level = p.add_mutually_exclusive_group(required=True)
    level.add_argument("--k", type=int)
    level.add_argument("--k-max", type=int)
    p.add_argument("--budget", type=int, default=None, help="maximum candidate pairs per level")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
