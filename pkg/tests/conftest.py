from __future__ import annotations

from itertools import combinations, permutations

import networkx as nx
import pytest

from a1graphs.graph import LabeledGraph
from a1graphs.posets import GradedPoset


def product_poset(L1: GradedPoset, L2: GradedPoset) -> GradedPoset:
    """Materialise L1 x L2 (componentwise order).  Test-only oracle."""
    elements = tuple((x, y) for x in L1.elements for y in L2.elements)
    covers = frozenset(
        [((a, y), (b, y)) for a, b in L1.covers for y in L2.elements]
        + [((x, a), (x, b)) for x in L1.elements for a, b in L2.covers]
    )
    rank = {(x, y): L1.rank[x] + L2.rank[y] for x, y in elements}
    return GradedPoset(elements, covers, rank)


def to_nx(g: LabeledGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n_vertices))
    G.add_edges_from(g.edges)
    return G


def from_nx(G: nx.Graph) -> LabeledGraph:
    G = nx.convert_node_labels_to_integers(G)
    return LabeledGraph.from_edges(range(G.number_of_nodes()), G.edges())


def brute_short_cycles(g: LabeledGraph) -> tuple[set, set]:
    """Triangles and 4-cycles by checking every vertex subset of size 3 and 4."""
    has = g.has_edge
    tri, quad = set(), set()
    for a, b, c in combinations(range(g.n_vertices), 3):
        if has(a, b) and has(b, c) and has(a, c):
            tri.add(frozenset((a, b, c)))
    for s in combinations(range(g.n_vertices), 4):
        a = s[0]
        for b, c, d in permutations(s[1:]):
            if b > d:
                continue
            if has(a, b) and has(b, c) and has(c, d) and has(d, a):
                quad.add((a, b, c, d))
    return tri, quad


def brute_chain_adjacency(chains, q):
    """All-pairs comparison: chains adjacent iff they share at least q+1 elements."""
    edges = set()
    for a, b in combinations(range(len(chains)), 2):
        if len(set(chains[a]) & set(chains[b])) >= q + 1:
            edges.add((a, b))
    return edges


@pytest.fixture(scope="session")
def petersen() -> LabeledGraph:
    return from_nx(nx.petersen_graph())
