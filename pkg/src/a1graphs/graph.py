"""A small immutable labelled graph plus import/export helpers."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Hashable, Iterable, Sequence

from .words import Permutation, format_permutation


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph on vertices ``0..len(labels)-1``.

    ``edges`` holds pairs ``(u, v)`` with ``u < v`` in sorted order and
    ``edge_labels`` is either empty or parallel to ``edges`` (``None`` for an
    unlabelled edge).  Vertex labels are arbitrary hashables: permutations,
    chains, or shuffle triples.
    """

    labels: tuple[Hashable, ...]
    edges: tuple[tuple[int, int], ...]
    edge_labels: tuple[Any, ...] = ()

    def __post_init__(self):
        n = len(self.labels)
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < v < n):
                raise ValueError(f"bad edge {(u, v)} for {n} vertices")
            if (u, v) in seen:
                raise ValueError(f"parallel edge {(u, v)}")
            seen.add((u, v))
        if self.edge_labels and len(self.edge_labels) != len(self.edges):
            raise ValueError("edge_labels must be parallel to edges")

    @classmethod
    def from_edges(cls, labels: Sequence[Hashable], edges: Iterable[tuple]) -> LabeledGraph:
        """Build from (u, v) or (u, v, label) tuples; normalises orientation and order."""
        found: dict[tuple[int, int], Any] = {}
        for e in edges:
            u, v = e[0], e[1]
            lab = e[2] if len(e) > 2 else None
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in found and found[key] != lab:
                raise ValueError(f"inconsistent labels on edge {key}")
            found[key] = lab
        keys = sorted(found)
        labs = tuple(found[k] for k in keys)
        if all(lab is None for lab in labs):
            labs = ()
        return cls(tuple(labels), tuple(keys), labs)

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.labels]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for a in adj:
            a.sort()
        return adj

    @cached_property
    def neighbor_sets(self) -> list[set[int]]:
        return [set(a) for a in self.adjacency]

    @cached_property
    def index(self) -> dict[Hashable, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: k for k, e in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def edge_label(self, u: int, v: int):
        if not self.edge_labels:
            return None
        return self.edge_labels[self.edge_index[(u, v) if u < v else (v, u)]]

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n_vertices
        comps = []
        for s in range(self.n_vertices):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                u = stack.pop()
                comp.append(u)
                for v in self.adjacency[u]:
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            comps.append(sorted(comp))
        return comps

    def labeled_edge_set(self) -> set[frozenset]:
        """Edges as unordered pairs of vertex labels, for cross-construction checks."""
        return {frozenset((self.labels[u], self.labels[v])) for u, v in self.edges}

    def relabel(self, perm: Sequence[int]) -> LabeledGraph:
        """Move vertex ``i`` to index ``perm[i]``."""
        labels = [None] * self.n_vertices
        for i, j in enumerate(perm):
            labels[j] = self.labels[i]
        edges = [(perm[u], perm[v], lab) for (u, v), lab in
                 zip(self.edges, self.edge_labels or [None] * self.n_edges)]
        return LabeledGraph.from_edges(labels, edges)


def box_product(g1: LabeledGraph, g2: LabeledGraph) -> LabeledGraph:
    """Cartesian product: vertex ``(a, b)`` gets index ``a * |V2| + b``."""
    n2 = g2.n_vertices
    labels = [(x, y) for x in g1.labels for y in g2.labels]
    edges = []
    for a in range(g1.n_vertices):
        for (u, v), lab in zip(g2.edges, g2.edge_labels or [None] * g2.n_edges):
            edges.append((a * n2 + u, a * n2 + v, lab))
    for (u, v), lab in zip(g1.edges, g1.edge_labels or [None] * g1.n_edges):
        for b in range(n2):
            edges.append((u * n2 + b, v * n2 + b, lab))
    return LabeledGraph.from_edges(labels, edges)


def cycle_graph(k: int) -> LabeledGraph:
    if k < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return LabeledGraph.from_edges(range(k), [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> LabeledGraph:
    """The path I_k on k+1 vertices."""
    return LabeledGraph.from_edges(range(k + 1), [(i, i + 1) for i in range(k)])


# ----------------------------------------------------------------------
# formats
# ----------------------------------------------------------------------


def format_label(label) -> str:
    if isinstance(label, Permutation):
        return format_permutation(label)
    if hasattr(label, "serialize"):
        return label.serialize()
    return str(label)


def _edge_label_text(lab) -> str:
    if lab is None:
        return ""
    if isinstance(lab, int):
        return f"s_{lab}"
    return str(lab)


def to_edgelist(g: LabeledGraph) -> str:
    """One edge per line: ``u v s_j`` (label omitted when absent)."""
    lines = []
    for (u, v), lab in zip(g.edges, g.edge_labels or [None] * g.n_edges):
        text = _edge_label_text(lab)
        lines.append(f"{u} {v} {text}".rstrip())
    return "\n".join(lines) + ("\n" if lines else "")


def to_dot(g: LabeledGraph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    for i, lab in enumerate(g.labels):
        out.append(f'  {i} [label="{format_label(lab)}"];')
    for (u, v), lab in zip(g.edges, g.edge_labels or [None] * g.n_edges):
        text = _edge_label_text(lab)
        attr = f' [label="{text}"]' if text else ""
        out.append(f"  {u} -- {v}{attr};")
    out.append("}")
    return "\n".join(out) + "\n"


def vertex_table(g: LabeledGraph) -> list[dict]:
    rows = []
    for i, lab in enumerate(g.labels):
        row = {"index": i, "label": format_label(lab)}
        if isinstance(lab, Permutation):
            row["permutation"] = format_permutation(lab)
            row["level"] = lab.level
        rows.append(row)
    return rows


def to_json(g: LabeledGraph) -> str:
    doc = {
        "vertices": vertex_table(g),
        "edges": [
            [u, v, _edge_label_text(lab) or None]
            for (u, v), lab in zip(g.edges, g.edge_labels or [None] * g.n_edges)
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_edgelist(text: str) -> LabeledGraph:
    """Read ``u v [label]`` lines; ``#`` starts a comment.  Labels ``s_j`` become ``j``."""
    edges = []
    top = -1
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ValueError(f"malformed edge line: {line!r}")
        u, v = int(parts[0]), int(parts[1])
        lab = None
        if len(parts) > 2:
            tok = parts[2]
            lab = int(tok[2:]) if tok.startswith("s_") else tok
        edges.append((u, v, lab))
        top = max(top, u, v)
    return LabeledGraph.from_edges(range(top + 1), edges)
