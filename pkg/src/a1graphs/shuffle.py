"""Chain graphs of a product of graded posets from the chain graphs of the factors.

A maximal chain of ``L1 x L2`` is a pair of maximal chains of the factors
together with a shuffle of their edges.  The graph is built in three steps:

1. the shuffle graph on ``k``-sequences (``k = rank L1``, ``l = rank L2``);
2. the triple box product ``Gamma(L1) [] Gamma(L2) [] shuffle``, with each
   edge tagged by type (1: shuffle move, 2: move in ``L2``, 3: move in
   ``L1``) and by the rank where the factor chains differ;
3. removal of the type 2/3 edges whose diamond gets stretched by the shuffle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import NamedTuple

from .graph import LabeledGraph
from .posets import GradedPoset, StructureError, chain_to_permutation, top_gamma_graph
from .words import Permutation


def dual_sequence(kappa: tuple[int, ...], l: int) -> tuple[int, ...]:
    """``lambda_j = #{i : a_i < j}`` for ``j = 1..l``."""
    return tuple(sum(1 for a in kappa if a < j) for j in range(1, l + 1))


@dataclass(frozen=True, order=True)
class ShuffleVertex:
    kappa: tuple[int, ...]
    lam: tuple[int, ...]

    def __post_init__(self):
        l, k = len(self.lam), len(self.kappa)
        if any(a > b for a, b in zip(self.kappa, self.kappa[1:])):
            raise ValueError(f"k-sequence {self.kappa} is not weakly increasing")
        if any(not 0 <= a <= l for a in self.kappa):
            raise ValueError(f"k-sequence {self.kappa} has entries outside 0..{l}")
        if dual_sequence(self.kappa, l) != self.lam:
            raise ValueError(f"{self.lam} is not the dual of {self.kappa}")
        if any(not 0 <= b <= k for b in self.lam):
            raise ValueError("l-sequence out of range")

    @classmethod
    def from_kappa(cls, kappa, l: int) -> ShuffleVertex:
        kappa = tuple(kappa)
        return cls(kappa, dual_sequence(kappa, l))

    def serialize(self) -> str:
        return ",".join(map(str, self.kappa))


def sequences_adjacent(s: tuple[int, ...], t: tuple[int, ...]) -> bool:
    if len(s) != len(t):
        return False
    diff = [abs(a - b) for a, b in zip(s, t) if a != b]
    return diff == [1]


def shuffle_graph(k: int, l: int) -> LabeledGraph:
    """All ``C(k+l, k)`` shuffles; adjacent iff the k-sequences differ by 1 in one slot."""
    if k < 0 or l < 0:
        raise ValueError("k and l must be non-negative")
    verts = [ShuffleVertex.from_kappa(c, l) for c in combinations_with_replacement(range(l + 1), k)]
    assert len(verts) == comb(k + l, k)
    index = {v.kappa: i for i, v in enumerate(verts)}
    edges = []
    for i, v in enumerate(verts):
        for p in range(k):
            nxt = v.kappa[:p] + (v.kappa[p] + 1,) + v.kappa[p + 1:]
            j = index.get(nxt)
            if j is not None:
                edges.append((i, j))
    return LabeledGraph.from_edges(verts, edges)


def _chain_text(chain) -> str:
    return ",".join(map(str, chain))


@dataclass(frozen=True)
class TripleVertex:
    c1: tuple
    c2: tuple
    shuffle: ShuffleVertex

    def serialize(self) -> str:
        return f"{_chain_text(self.c1)}|{_chain_text(self.c2)}|{self.shuffle.serialize()}"


class EdgeType(NamedTuple):
    type: int  # 1: shuffle move, 2: C2 ~ C2', 3: C1 ~ C1'
    rank: int | None  # rank where the factor chains differ (types 2 and 3)

    def __str__(self):
        return f"T{self.type}" if self.rank is None else f"T{self.type}@{self.rank}"


def intermediate_graph(L1: GradedPoset, L2: GradedPoset) -> LabeledGraph:
    """``Gamma(L1) [] Gamma(L2) [] shuffle(k, l)`` with typed edges.

    Vertex ``(c1, c2, s)`` sits at index ``(c1 * |V2| + c2) * |S| + s``.
    """
    g1, g2 = top_gamma_graph(L1), top_gamma_graph(L2)
    k, l = L1.total_rank, L2.total_rank
    sg = shuffle_graph(k, l)
    n2, ns = g2.n_vertices, sg.n_vertices

    def vid(a, b, s):
        return (a * n2 + b) * ns + s

    labels = [
        TripleVertex(c1, c2, sh) for c1 in g1.labels for c2 in g2.labels for sh in sg.labels
    ]
    edges = []
    for a in range(g1.n_vertices):
        for b in range(n2):
            for s, t in sg.edges:
                edges.append((vid(a, b, s), vid(a, b, t), EdgeType(1, None)))
    for a in range(g1.n_vertices):
        for (b, b2), i in zip(g2.edges, g2.edge_labels):
            for s in range(ns):
                edges.append((vid(a, b, s), vid(a, b2, s), EdgeType(2, i)))
    for (a, a2), i in zip(g1.edges, g1.edge_labels):
        for b in range(n2):
            for s in range(ns):
                edges.append((vid(a, b, s), vid(a2, b, s), EdgeType(3, i)))
    return LabeledGraph.from_edges(labels, edges)


def edge_kept(v: TripleVertex, info: EdgeType) -> bool:
    if info.type == 1:
        return True
    if info.type == 2:
        return info.rank not in v.shuffle.kappa
    if info.type == 3:
        return info.rank not in v.shuffle.lam
    raise StructureError(f"unknown edge type {info.type}")


def prune_edges(gt: LabeledGraph) -> LabeledGraph:
    """Drop type-2 edges with ``i in kappa`` and type-3 edges with ``i in lambda``."""
    if not gt.edge_labels and gt.n_edges:
        raise StructureError("intermediate graph edges carry no type metadata")
    kept = []
    for (u, v), info in zip(gt.edges, gt.edge_labels):
        if not isinstance(info, EdgeType):
            raise StructureError(f"edge {(u, v)} has no type metadata")
        # kappa (and lambda) agree on both ends of type 2/3 edges
        if edge_kept(gt.labels[u], info):
            kept.append((u, v, info))
    return LabeledGraph.from_edges(gt.labels, kept)


def product_gamma_graph(L1: GradedPoset, L2: GradedPoset) -> LabeledGraph:
    return prune_edges(intermediate_graph(L1, L2))


def edge_type_counts(g: LabeledGraph) -> dict[int, int]:
    counts = {1: 0, 2: 0, 3: 0}
    for info in g.edge_labels:
        counts[info.type] += 1
    return counts


def product_chain(v: TripleVertex, L1: GradedPoset, L2: GradedPoset) -> tuple:
    """The proper maximal chain of ``L1 x L2`` (pairs of elements) named by ``v``."""
    xs = (L1.bottom,) + tuple(v.c1) + (L1.top,)
    ys = (L2.bottom,) + tuple(v.c2) + (L2.top,)
    p = q = 0
    out = [(xs[0], ys[0])]
    # a_m counts the C2 edges below the m-th C1 edge
    for a in tuple(v.shuffle.kappa) + (len(ys) - 1,):
        while q < a:
            q += 1
            out.append((xs[p], ys[q]))
        if p < len(xs) - 1:
            p += 1
            out.append((xs[p], ys[q]))
    return tuple(out[1:-1])


def triple_to_permutation(v: TripleVertex, n: int) -> Permutation:
    """For ``B_{n-1} x B_1``: insert ``n`` into the chain's permutation at position ``a + 1``."""
    if len(v.shuffle.lam) != 1:
        raise ValueError("second factor must be B_1")
    a = v.shuffle.lam[0]
    base = chain_to_permutation(v.c1, n - 1).entries
    if not 0 <= a <= n - 1:
        raise ValueError(f"shuffle value {a} out of range")
    return Permutation(base[:a] + (n,) + base[a:])
