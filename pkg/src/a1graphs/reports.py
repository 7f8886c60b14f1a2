"""JSON reports that tie the graph constructions, ranks and class counts together."""

from __future__ import annotations

from typing import Sequence

from . import __version__
from .graph import LabeledGraph
from .homotopy import RelationData
from .linalg import DEFAULT_PRIMES
from .posets import (
    DEFAULT_CAP,
    boolean_lattice,
    check_cap,
    permutahedron_graph,
    permutation_gamma_graph,
)
from .shuffle import product_gamma_graph, triple_to_permutation
from .sixcycles import equivalence_classes, rank_formula, recursion_check, vertical_total_formula

SCHEMA_VERSION = 1
TORSION_DIM_LIMIT = 500


def resolve_q(q: str | int | None, n: int) -> int:
    """Accept an integer or the symbolic forms ``n-3`` / ``n-4`` (``n-k`` generally)."""
    if q is None:
        return n - 3
    if isinstance(q, int):
        value = q
    else:
        text = q.replace(" ", "")
        if text.startswith("n-"):
            value = n - int(text[2:])
        elif text == "n":
            value = n
        else:
            value = int(text)
    if not 0 <= value <= n - 2:
        raise ValueError(f"q={value} outside 0..{n - 2} for n={n}")
    return value


def product_as_permutation_graph(n: int, cap: int = DEFAULT_CAP, force_large: bool = False) -> LabeledGraph:
    """Pruned ``Gamma(B_{n-1} x B_1)`` relabelled by permutations of ``{1..n}``."""
    check_cap(n, cap, force_large)
    g = product_gamma_graph(boolean_lattice(n - 1, cap, force_large), boolean_lattice(1))
    perms = [triple_to_permutation(v, n) for v in g.labels]
    # lexicographic vertex order, matching permutahedron_graph
    order = sorted(range(len(perms)), key=lambda i: perms[i].entries)
    new_index = {old: new for new, old in enumerate(order)}
    labels = [perms[i] for i in order]
    edges = []
    for (u, v) in g.edges:
        a, b = perms[u].entries, perms[v].entries
        j = next(p for p in range(n - 1) if a[p] != b[p]) + 1
        edges.append((new_index[u], new_index[v], j))
    return LabeledGraph.from_edges(labels, edges)


def product_verify(n: int, cap: int = DEFAULT_CAP, force_large: bool = False) -> dict:
    direct = permutahedron_graph(n, cap, force_large)
    prod = product_as_permutation_graph(n, cap, force_large)
    same = direct.labeled_edge_set() == prod.labeled_edge_set()
    return {
        "n": n,
        "direct_vertices": direct.n_vertices,
        "direct_edges": direct.n_edges,
        "product_vertices": prod.n_vertices,
        "product_edges": prod.n_edges,
        "edge_sets_equal": same,
    }


def rank_report(g: LabeledGraph, primes: Sequence[int] = DEFAULT_PRIMES, torsion: bool = False) -> dict:
    return RelationData(g).report(primes, torsion=torsion)


def classes_report(n: int, primes: Sequence[int] = DEFAULT_PRIMES, with_rank: bool = True,
                   cap: int = DEFAULT_CAP, force_large: bool = False) -> dict:
    rep = equivalence_classes(n, cap, force_large)
    doc = {"schema_version": SCHEMA_VERSION}
    doc.update(rep.to_dict())
    doc["rank_formula"] = rank_formula(n)
    doc["rank_linear_algebra"] = (
        rank_report(permutahedron_graph(n, cap, force_large), primes)["a1_rank"] if with_rank else None
    )
    return doc


def full_report(
    n: int,
    q: str | int | None = None,
    primes: Sequence[int] = DEFAULT_PRIMES,
    cap: int = DEFAULT_CAP,
    force_large: bool = False,
) -> dict:
    """Run every construction and consistency check for ``n``.

    The rank is computed on ``Gamma^q(B_n)``; the expected value is the
    closed form for ``q = n-3`` and 0 for smaller ``q``.
    """
    if n < 3:
        raise ValueError("report needs n >= 3")
    check_cap(n, cap, force_large)
    qv = resolve_q(q, n)
    checks: dict[str, dict] = {}

    def check(name, expected, actual):
        checks[name] = {"expected": expected, "actual": actual, "ok": expected == actual}

    direct = permutahedron_graph(n, cap, force_large)
    degrees = set(direct.degrees())
    check("regularity", [n - 1], sorted(degrees))

    via_chains = permutation_gamma_graph(n, n - 3, cap, force_large)
    check("chain_graph_matches_direct", True,
          via_chains.labeled_edge_set() == direct.labeled_edge_set())

    pv = product_verify(n, cap, force_large)
    check("shuffle_product_matches_direct", True, pv["edge_sets_equal"])

    target = direct if qv == n - 3 else permutation_gamma_graph(n, qv, cap, force_large)
    data = RelationData(target)
    graph_doc = data.report(primes, torsion=data.basis.dimension <= TORSION_DIM_LIMIT)
    rank_la = graph_doc["a1_rank"]
    formula = rank_formula(n)
    expected_rank = formula if qv == n - 3 else 0
    check("a1_rank", expected_rank, rank_la)
    if "invariant_factors" in graph_doc:
        factors = graph_doc["invariant_factors"]
        check("torsion_free", True, all(f == 1 for f in factors))

    classes = equivalence_classes(n, cap, force_large)
    check("vertical_total", vertical_total_formula(n), classes.vertical_total)
    if n >= 4:
        check("recursion", True, recursion_check(n, classes))
    check("classes_bound_rank", True, classes.total_classes >= formula)

    return {
        "schema_version": SCHEMA_VERSION,
        "version": __version__,
        "n": n,
        "q": qv,
        "graph": graph_doc,
        "rank_linear_algebra": rank_la,
        "rank_formula": formula,
        "expected_rank": expected_rank,
        "total_classes": classes.total_classes,
        "vertical_total": classes.vertical_total,
        "classes": classes.to_dict(),
        "checks": checks,
        "all_consistent": all(c["ok"] for c in checks.values()),
    }
