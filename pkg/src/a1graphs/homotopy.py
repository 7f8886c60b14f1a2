"""Rank of the abelianised discrete fundamental group of a graph.

``A_1`` of a graph is its classical fundamental group with every 3- and
4-cycle killed.  After abelianising, the rank is the dimension of the
cycle space minus the rank of the span of the short cycles, both measured
in the fundamental-cycle basis of a BFS spanning forest.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .graph import LabeledGraph
from .linalg import (
    DEFAULT_PRIMES,
    SparseIntMatrix,
    hermite_rows,
    matrix_rank,
    reduce_mod_hermite,
    smith_invariants,
)

SNF_GUARD = 2000


@dataclass(frozen=True)
class CycleBasis:
    """Fundamental cycles of a BFS spanning forest.

    Every non-tree edge ``(u, v)``, ``u < v``, indexes one basis cycle and
    is oriented from ``u`` to ``v``.
    """

    graph: LabeledGraph
    tree: frozenset[tuple[int, int]]
    coords: dict[tuple[int, int], int]
    n_components: int

    @property
    def dimension(self) -> int:
        return len(self.coords)


def spanning_forest(g: LabeledGraph) -> CycleBasis:
    adj = g.adjacency
    seen = [False] * g.n_vertices
    tree = set()
    n_comp = 0
    for root in range(g.n_vertices):
        if seen[root]:
            continue
        n_comp += 1
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    tree.add((u, v) if u < v else (v, u))
                    queue.append(v)
    coords = {}
    for e in g.edges:
        if e not in tree:
            coords[e] = len(coords)
    basis = CycleBasis(g, frozenset(tree), coords, n_comp)
    assert basis.dimension == g.n_edges - g.n_vertices + n_comp
    return basis


@dataclass(frozen=True)
class ShortCycle:
    """A 3- or 4-cycle, rotated to start at its least vertex and oriented
    towards the smaller of that vertex's two cycle neighbours."""

    vertices: tuple[int, ...]

    @classmethod
    def canonical(cls, cyc: Sequence[int]) -> ShortCycle:
        cyc = list(cyc)
        i = cyc.index(min(cyc))
        cyc = cyc[i:] + cyc[:i]
        if cyc[-1] < cyc[1]:
            cyc = [cyc[0]] + cyc[1:][::-1]
        return cls(tuple(cyc))

    def closed_walk(self) -> tuple[int, ...]:
        return self.vertices + (self.vertices[0],)

    def __len__(self):
        return len(self.vertices)


def enumerate_short_cycles(g: LabeledGraph) -> list[ShortCycle]:
    """Every 3-cycle and 4-cycle exactly once.

    4-cycles ``a-b-c-d`` with ``a`` minimal are found from the common
    neighbours (> ``a``) of ``a`` and each vertex ``c`` at distance two.
    """
    adj, nbrs = g.adjacency, g.neighbor_sets
    out = []
    for a in range(g.n_vertices):
        higher = [b for b in adj[a] if b > a]
        for b, c in combinations(higher, 2):
            if c in nbrs[b]:
                out.append(ShortCycle((a, b, c)))
        via: dict[int, list[int]] = {}
        for b in higher:
            for c in adj[b]:
                if c > a:
                    via.setdefault(c, []).append(b)
        for c, mids in via.items():
            for b, d in combinations(sorted(mids), 2):
                out.append(ShortCycle((a, b, c, d)))
    out.sort(key=lambda s: (len(s), s.vertices))
    return out


def _walk_coords(walk: Sequence[int], basis: CycleBasis) -> dict[int, int]:
    if len(walk) < 1 or walk[0] != walk[-1]:
        raise ValueError("walk is not closed")
    g = basis.graph
    out: dict[int, int] = {}
    for u, v in zip(walk, walk[1:]):
        key = (u, v) if u < v else (v, u)
        if key not in g.edge_index:
            raise ValueError(f"{u}-{v} is not an edge")
        k = basis.coords.get(key)
        if k is None:
            continue
        out[k] = out.get(k, 0) + (1 if u < v else -1)
        if not out[k]:
            del out[k]
    return out


def cycle_coordinates(walk: Sequence[int], basis: CycleBasis) -> list[int]:
    """Signed traversal counts of the non-tree edges along a closed walk."""
    vec = [0] * basis.dimension
    for k, v in _walk_coords(walk, basis).items():
        vec[k] = v
    return vec


class RelationData:
    """Cycle basis, short cycles and their relation matrix for one graph."""

    def __init__(self, g: LabeledGraph):
        self.graph = g
        self.basis = spanning_forest(g)
        self.short_cycles = enumerate_short_cycles(g)
        self.rows = [_walk_coords(c.closed_walk(), self.basis) for c in self.short_cycles]

    @property
    def matrix(self) -> SparseIntMatrix:
        return SparseIntMatrix(self.rows, self.basis.dimension)

    def relation_rank(self, primes: Sequence[int] = DEFAULT_PRIMES) -> int:
        return matrix_rank(self.rows, self.basis.dimension, primes)[0]

    @cached_property
    def hermite(self) -> list[dict[int, int]]:
        return hermite_rows(self.rows, self.basis.dimension)

    def h1_class(self, walk: Sequence[int]) -> tuple[int, ...]:
        red = reduce_mod_hermite(_walk_coords(walk, self.basis), self.hermite)
        vec = [0] * self.basis.dimension
        for k, v in red.items():
            vec[k] = v
        return tuple(vec)

    def report(self, primes: Sequence[int] = DEFAULT_PRIMES, torsion: bool = False) -> dict:
        rank = self.relation_rank(primes)
        dim = self.basis.dimension
        doc = {
            "vertices": self.graph.n_vertices,
            "edges": self.graph.n_edges,
            "cycle_dim": dim,
            "n_short_cycles": len(self.short_cycles),
            "relation_rank": rank,
            "a1_rank": dim - rank,
        }
        if torsion:
            doc["invariant_factors"] = smith_invariants(self.rows, dim, SNF_GUARD)
        return doc


def a1_rank(g: LabeledGraph, primes: Sequence[int] = DEFAULT_PRIMES) -> int:
    """``(|E| - |V| + c) - rank(short-cycle relations)``.

    Short cycles live inside single components, so one forest-wide basis
    gives the sum of the per-component ranks.
    """
    data = RelationData(g)
    return data.basis.dimension - data.relation_rank(primes)


def torsion_check(g: LabeledGraph, guard: int = SNF_GUARD) -> list[int]:
    """Invariant factors of the relation matrix; all ones means a free quotient."""
    data = RelationData(g)
    return smith_invariants(data.rows, data.basis.dimension, guard)


def h1_class(walk: Sequence[int], g: LabeledGraph | RelationData) -> tuple[int, ...]:
    """Coordinates of a closed walk modulo the integer span of the short cycles.

    Equal outputs exactly when the walks are homologous once 3- and
    4-cycles are filled in.  Pass a ``RelationData`` to reuse its Hermite form.
    """
    data = g if isinstance(g, RelationData) else RelationData(g)
    return data.h1_class(walk)
