"""Command-line front end.

    a1graphs build --n 4 --format edgelist
    a1graphs rank --n 5 [--q n-4] [--torsion]
    a1graphs rank --input graph.txt
    a1graphs classes --n 5
    a1graphs product-verify --n 5
    a1graphs word-reduce --n 5 "1 2 1 2 1 2"
    a1graphs word-equiv --n 5 "4 1 2 1 2 1 2 4" "1 2 1 2 1 2" [--oracle]
    a1graphs report --n 5 [--q n-4]
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .graph import LabeledGraph, parse_edgelist, to_dot, to_edgelist, to_json, vertex_table
from .linalg import DEFAULT_PRIMES
from .posets import DEFAULT_CAP, SizeCapError, permutahedron_graph, permutation_gamma_graph
from .reports import (
    SCHEMA_VERSION,
    classes_report,
    full_report,
    product_as_permutation_graph,
    product_verify,
    rank_report,
    resolve_q,
)
from .words import (
    InconclusiveSearch,
    bfs_oracle_equivalent,
    format_word,
    parse_word,
    racg_normal_form,
    words_equivalent,
)


def _primes(text: str | None):
    if not text:
        return DEFAULT_PRIMES
    p = tuple(int(x) for x in text.split(","))
    if len(p) != 2:
        raise argparse.ArgumentTypeError("--primes takes two comma-separated integers")
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _graph_for(args) -> LabeledGraph:
    if getattr(args, "input", None):
        return parse_edgelist(Path(args.input).read_text())
    if args.n is None:
        raise SystemExit("--n or --input is required")
    if getattr(args, "product", False):
        return product_as_permutation_graph(args.n, DEFAULT_CAP, args.force_large)
    q = resolve_q(args.q, args.n)
    if q == args.n - 3:
        return permutahedron_graph(args.n, DEFAULT_CAP, args.force_large)
    return permutation_gamma_graph(args.n, q, DEFAULT_CAP, args.force_large)


def cmd_build(args) -> int:
    g = _graph_for(args)
    if args.format == "dot":
        _emit(to_dot(g), args.out)
    elif args.format == "json":
        _emit(to_json(g), args.out)
    else:
        _emit(to_edgelist(g), args.out)
        if args.out:
            Path(args.out + ".vertices.json").write_text(_dump(vertex_table(g)))
    return 0


def cmd_rank(args) -> int:
    g = _graph_for(args)
    doc = {"schema_version": SCHEMA_VERSION}
    doc.update(rank_report(g, args.primes, torsion=args.torsion))
    _emit(_dump(doc), args.out)
    return 0


def cmd_classes(args) -> int:
    doc = classes_report(args.n, args.primes, cap=DEFAULT_CAP, force_large=args.force_large)
    _emit(_dump(doc), args.out)
    return 0 if doc["rank_formula"] == doc["rank_linear_algebra"] else 1


def cmd_product_verify(args) -> int:
    doc = {"schema_version": SCHEMA_VERSION}
    doc.update(product_verify(args.n, DEFAULT_CAP, args.force_large))
    _emit(_dump(doc), args.out)
    return 0 if doc["edge_sets_equal"] else 1


def cmd_word_reduce(args) -> int:
    w = parse_word(args.word)
    nf = racg_normal_form(w)
    if args.json:
        _emit(_dump({"word": format_word(w), "normal_form": format_word(nf), "length": len(nf)}), args.out)
    else:
        _emit(format_word(nf) + "\n", args.out)
    return 0


def cmd_word_equiv(args) -> int:
    w1, w2 = parse_word(args.word1), parse_word(args.word2)
    doc = {"equivalent": words_equivalent(w1, w2)}
    if args.oracle:
        try:
            doc["oracle"] = bfs_oracle_equivalent(w1, w2, max_len=args.max_len, n=args.n)
        except InconclusiveSearch:
            doc["oracle"] = "inconclusive"
    if args.json:
        _emit(_dump(doc), args.out)
    else:
        _emit(("true" if doc["equivalent"] else "false") + "\n", args.out)
    return 0


def cmd_report(args) -> int:
    doc = full_report(args.n, args.q, args.primes, DEFAULT_CAP, args.force_large)
    _emit(_dump(doc), args.out)
    if not doc["all_consistent"]:
        bad = [k for k, v in doc["checks"].items() if not v["ok"]]
        print(f"inconsistent: {', '.join(bad)}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="a1graphs", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_n=True):
        p.add_argument("--n", type=int, required=need_n)
        p.add_argument("--out", default=None)
        p.add_argument("--force-large", action="store_true")
        p.add_argument("--primes", type=_primes, default=DEFAULT_PRIMES)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("build", help="write Gamma(B_n), Gamma^q or the shuffle-product graph")
    common(p, need_n=False)
    p.add_argument("--q", default=None)
    p.add_argument("--product", action="store_true")
    p.add_argument("--format", choices=["edgelist", "dot", "json"], default="edgelist")
    p.set_defaults(func=cmd_build, input=None)

    p = sub.add_parser("rank", help="rank of the abelianised A_1 group")
    common(p, need_n=False)
    p.add_argument("--q", default=None)
    p.add_argument("--input", default=None, help="edge-list file instead of --n")
    p.add_argument("--torsion", action="store_true")
    p.set_defaults(func=cmd_rank, product=False)

    p = sub.add_parser("classes", help="6-cycle equivalence classes")
    common(p)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("product-verify", help="compare the shuffle-product graph with Gamma(B_n)")
    common(p)
    p.set_defaults(func=cmd_product_verify)

    p = sub.add_parser("word-reduce", help="normal form of a word")
    common(p, need_n=False)
    p.add_argument("word")
    p.set_defaults(func=cmd_word_reduce)

    p = sub.add_parser("word-equiv", help="T2/T3 equivalence of two words")
    common(p, need_n=False)
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force search")
    p.add_argument("--max-len", type=int, default=None,
                   help="oracle length bound (default: len1 + len2 + 4)")
    p.set_defaults(func=cmd_word_equiv)

    p = sub.add_parser("report", help="full consistency report")
    common(p)
    p.add_argument("--q", default=None)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except SizeCapError as e:
        print(f"error: {e} (CLI: --force-large)", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
