"""Graded posets, maximal chains and the chain graphs Gamma^q.

Vertices of ``gamma_graph(P, q)`` are the maximal chains of the proper part
of ``P``; two chains are adjacent when they share at least ``q + 1``
elements.  For the Boolean lattice ``B_n`` and ``q = n - 3`` this is the
1-skeleton of the permutahedron, which ``permutahedron_graph`` builds
directly from permutations.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Hashable, NamedTuple

from .graph import LabeledGraph
from .words import Permutation

DEFAULT_CAP = 8

Chain = tuple  # rank-increasing tuple of poset elements


class SizeCapError(ValueError):
    pass


class StructureError(ValueError):
    pass


def check_cap(n: int, cap: int = DEFAULT_CAP, force_large: bool = False) -> None:
    if n > cap and not force_large:
        raise SizeCapError(
            f"n={n} exceeds the size cap {cap} ({n}! vertices); pass force_large to override"
        )


@dataclass(frozen=True)
class GradedPoset:
    """A finite graded poset given by its cover relations.

    ``elements`` fixes a stable order; covers ``(a, b)`` mean ``a < b`` with
    nothing in between and must raise rank by exactly one.
    """

    elements: tuple[Hashable, ...]
    covers: frozenset[tuple[Hashable, Hashable]]
    rank: dict

    def __post_init__(self):
        for a, b in self.covers:
            if self.rank[b] != self.rank[a] + 1:
                raise StructureError(f"cover {a} < {b} does not raise rank by one")

    def __hash__(self):
        return hash((self.elements, self.covers))

    @cached_property
    def upper_covers(self) -> dict:
        order = {x: i for i, x in enumerate(self.elements)}
        up = {x: [] for x in self.elements}
        for a, b in self.covers:
            up[a].append(b)
        for x in up:
            up[x].sort(key=order.__getitem__)
        return up

    @property
    def bottom(self):
        mins = [x for x in self.elements if self.rank[x] == 0]
        if len(mins) != 1:
            raise StructureError("poset has no unique minimum")
        return mins[0]

    @property
    def top(self):
        r = self.total_rank
        maxs = [x for x in self.elements if self.rank[x] == r]
        if len(maxs) != 1:
            raise StructureError("poset has no unique maximum")
        return maxs[0]

    @property
    def total_rank(self) -> int:
        return max(self.rank.values())


def boolean_lattice(n: int, cap: int = DEFAULT_CAP, force_large: bool = False) -> GradedPoset:
    """Subsets of ``{1..n}`` encoded as bitmasks (bit ``v-1`` set iff ``v`` in the set)."""
    if n < 1:
        raise ValueError("n must be positive")
    check_cap(n, cap, force_large)
    elements = tuple(range(1 << n))
    covers = frozenset(
        (m, m | (1 << v)) for m in elements for v in range(n) if not m & (1 << v)
    )
    rank = {m: bin(m).count("1") for m in elements}
    return GradedPoset(elements, covers, rank)


def maximal_chains(P: GradedPoset, proper: bool = True) -> list[Chain]:
    """All maximal chains, in depth-first order over sorted upper covers.

    With ``proper=True`` the bottom and top elements are dropped, leaving
    ranks ``1..r-1``.
    """
    bottom, top = P.bottom, P.top
    up = P.upper_covers
    chains = []
    stack = [(bottom, (bottom,))]
    while stack:
        x, path = stack.pop()
        if not up[x]:
            if x != top:
                raise StructureError(f"maximal chain ends at {x}, not at the top")
            chains.append(path[1:-1] if proper else path)
            continue
        for y in reversed(up[x]):
            stack.append((y, path + (y,)))
    length = len(chains[0])
    if any(len(c) != length for c in chains):
        raise StructureError("maximal chains of different lengths: poset is not graded")
    return chains


def chain_to_permutation(chain: Chain, n: int) -> Permutation:
    """Proper chain of ``B_n`` (bitmasks) to the permutation listing the added elements."""
    if len(chain) != n - 1:
        raise ValueError("not a proper maximal chain of B_n")
    entries = []
    prev = 0
    for m in tuple(chain) + ((1 << n) - 1,):
        diff = m & ~prev
        entries.append(diff.bit_length())
        prev = m
    return Permutation(tuple(entries))


def permutation_to_chain(p: Permutation) -> Chain:
    out = []
    m = 0
    for v in p.entries[:-1]:
        m |= 1 << (v - 1)
        out.append(m)
    return tuple(out)


def gamma_graph(P: GradedPoset, q: int) -> LabeledGraph:
    """Graph on proper maximal chains; adjacency iff at least ``q + 1`` shared elements.

    Chains of length ``m`` share ``q + 1`` elements exactly when they differ
    in at most ``d = m - q - 1`` ranks, so chains are bucketed by their
    entries outside each ``d``-subset of ranks.  An edge between chains that
    differ at a single rank ``i`` carries label ``i``.
    """
    chains = maximal_chains(P, proper=True)
    m = len(chains[0])
    if not 0 <= q <= m - 1:
        raise ValueError(f"q={q} outside 0..{m - 1}")
    d = m - q - 1
    found: dict[tuple[int, int], int | None] = {}
    for S in combinations(range(m), d):
        keep = [i for i in range(m) if i not in S]
        buckets = defaultdict(list)
        for idx, c in enumerate(chains):
            buckets[tuple(c[i] for i in keep)].append(idx)
        for members in buckets.values():
            for a, b in combinations(members, 2):
                if (a, b) in found:
                    continue
                diff = [i for i in S if chains[a][i] != chains[b][i]]
                found[(a, b)] = diff[0] + 1 if len(diff) == 1 else None
    edges = [(a, b, lab) for (a, b), lab in found.items()]
    return LabeledGraph.from_edges(chains, edges)


def top_gamma_graph(P: GradedPoset) -> LabeledGraph:
    """``Gamma(P)``: chains adjacent iff they differ in exactly one element.

    Agrees with ``gamma_graph(P, r - 3)`` for rank ``r >= 3`` and also covers
    the degenerate ranks 1 and 2.
    """
    chains = maximal_chains(P, proper=True)
    m = len(chains[0])
    if m == 0:
        return LabeledGraph.from_edges(chains, [])
    buckets = defaultdict(list)
    for idx, c in enumerate(chains):
        for i in range(m):
            buckets[(i, c[:i] + c[i + 1:])].append(idx)
    edges = []
    for (i, _), members in buckets.items():
        for a, b in combinations(members, 2):
            edges.append((a, b, i + 1))
    return LabeledGraph.from_edges(chains, edges)


def permutahedron_graph(n: int, cap: int = DEFAULT_CAP, force_large: bool = False) -> LabeledGraph:
    """``Gamma(B_n)`` on permutations in lexicographic order; edges ``{p, p s_j}`` labelled ``j``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    check_cap(n, cap, force_large)
    perms = [Permutation(p) for p in permutations(range(1, n + 1))]
    index = {p.entries: i for i, p in enumerate(perms)}
    edges = []
    for i, p in enumerate(perms):
        e = list(p.entries)
        for j in range(1, n):
            e[j - 1], e[j] = e[j], e[j - 1]
            k = index[tuple(e)]
            e[j - 1], e[j] = e[j], e[j - 1]
            if i < k:
                edges.append((i, k, j))
    return LabeledGraph.from_edges(perms, edges)


def permutation_gamma_graph(n: int, q: int, cap: int = DEFAULT_CAP, force_large: bool = False) -> LabeledGraph:
    """``gamma_graph(B_n, q)`` with vertices relabelled by permutations (same vertex order)."""
    g = gamma_graph(boolean_lattice(n, cap, force_large), q)
    labels = tuple(chain_to_permutation(c, n) for c in g.labels)
    return LabeledGraph(labels, g.edges, g.edge_labels)


class EdgeClass(NamedTuple):
    kind: str  # "horizontal" or "vertical"
    level: int  # level for horizontal edges, lower level for vertical ones


def edge_class(sigma: Permutation, tau: Permutation) -> EdgeClass:
    """Classify an edge of ``Gamma(B_n)`` by where the largest value sits."""
    diff = [i for i in range(sigma.n) if sigma.entries[i] != tau.entries[i]]
    if len(diff) != 2 or diff[1] != diff[0] + 1:
        raise ValueError(f"{sigma} and {tau} are not adjacent")
    a, b = sigma.level, tau.level
    if a == b:
        return EdgeClass("horizontal", a)
    low = min(a, b)
    # a vertical edge between levels l and l+1 is labelled s_l
    assert diff[0] + 1 == low
    return EdgeClass("vertical", low)


def levels(g: LabeledGraph) -> dict[int, list[int]]:
    """Vertex indices grouped by level, for permutation-labelled graphs."""
    out = defaultdict(list)
    for i, p in enumerate(g.labels):
        out[p.level].append(i)
    return dict(out)
