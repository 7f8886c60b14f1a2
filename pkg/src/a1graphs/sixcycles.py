"""Primitive 6-cycles of the permutahedron graph and their homotopy classes.

A primitive 6-cycle is a right coset ``sigma <s_i, s_{i+1}>``: the
permutations obtained by rearranging positions ``i, i+1, i+2`` of
``sigma``.  Two such cycles with the same ``i`` are G-homotopic exactly when
one is the other times a product of generators disjoint from ``s_i`` and
``s_{i+1}``, so classes are orbits of that action.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb, factorial
from typing import NamedTuple, Sequence

from .graph import LabeledGraph
from .posets import DEFAULT_CAP, check_cap
from .words import BasedWord, GenWord, Permutation, evaluate_word, letter_parity


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.size = {x: 1 for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]
        return True

    def groups(self) -> list[list]:
        out = defaultdict(list)
        for x in self.parent:
            out[self.find(x)].append(x)
        return list(out.values())


def canonical_rep(p: Permutation, i: int) -> Permutation:
    """Least member of ``p <s_i, s_{i+1}>``: sort positions ``i..i+2``."""
    e = list(p.entries)
    e[i - 1:i + 2] = sorted(e[i - 1:i + 2])
    return Permutation(tuple(e))


@dataclass(frozen=True, order=True)
class SixCycle:
    i: int
    rep: Permutation

    def __post_init__(self):
        if not 1 <= self.i <= self.rep.n - 2:
            raise ValueError(f"generator index {self.i} out of range for n={self.rep.n}")
        if canonical_rep(self.rep, self.i) != self.rep:
            raise ValueError(f"{self.rep} is not the least member of its coset")

    @property
    def n(self) -> int:
        return self.rep.n

    @property
    def word(self) -> tuple[int, ...]:
        return (self.i, self.i + 1) * 3

    def vertices(self) -> list[Permutation]:
        """The six permutations in traversal order, leaving ``rep`` along ``s_i``."""
        out = [self.rep]
        for j in self.word[:-1]:
            out.append(out[-1].apply(j))
        return out

    def closed_walk(self, g: LabeledGraph) -> list[int]:
        idx = [g.index[p] for p in self.vertices()]
        return idx + idx[:1]

    def translate(self, j: int) -> SixCycle:
        return SixCycle(self.i, canonical_rep(self.rep.apply(j), self.i))

    def serialize(self) -> str:
        return f"{self.rep}@{self.i}"


class Orientation(NamedTuple):
    kind: str  # "horizontal" or "vertical"
    level: int  # level of a horizontal cycle, middle level of a vertical one


def enumerate_six_cycles(n: int, cap: int = DEFAULT_CAP, force_large: bool = False) -> list[SixCycle]:
    """``(n-2) * n!/6`` cycles, ordered by ``i`` then representative."""
    if n < 3:
        raise ValueError("n must be at least 3")
    check_cap(n, cap, force_large)
    out = []
    for i in range(1, n - 1):
        for p in permutations(range(1, n + 1)):
            if p[i - 1] < p[i] < p[i + 1]:
                out.append(SixCycle(i, Permutation(p)))
    return out


def orientation(c: SixCycle) -> Orientation:
    level = c.rep.level
    if level in (c.i, c.i + 1, c.i + 2):
        return Orientation("vertical", c.i + 1)
    return Orientation("horizontal", level)


def disjoint_generators(i: int, n: int) -> list[int]:
    """Generators commuting with both ``s_i`` and ``s_{i+1}``."""
    return [j for j in range(1, n) if j <= i - 2 or j >= i + 3]


@dataclass
class ClassReport:
    n: int
    per_i: list[dict]
    total_classes: int
    vertical_total: int
    horizontal_total: int
    classes: list[list[SixCycle]]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "per_i": self.per_i,
            "total_classes": self.total_classes,
            "vertical_total": self.vertical_total,
            "horizontal_total": self.horizontal_total,
        }


def equivalence_classes(n: int, cap: int = DEFAULT_CAP, force_large: bool = False) -> ClassReport:
    """Union-find orbits of the disjoint-generator action, with per-level counts."""
    cycles = enumerate_six_cycles(n, cap, force_large)
    uf = UnionFind(cycles)
    for c in cycles:
        for j in disjoint_generators(c.i, n):
            uf.union(c, c.translate(j))
    classes = sorted(sorted(g) for g in uf.groups())

    per_i = []
    for i in range(1, n - 1):
        horiz: dict[int, list[int]] = defaultdict(lambda: [0, 0])
        vert: dict[int, list] = defaultdict(lambda: [0, 0, set()])
        for cls in classes:
            if cls[0].i != i:
                continue
            o = orientation(cls[0])
            if o.kind == "horizontal":
                horiz[o.level][0] += len(cls)
                horiz[o.level][1] += 1
            else:
                vert[o.level][0] += len(cls)
                vert[o.level][1] += 1
                vert[o.level][2].add(len(cls))
        per_i.append({
            "i": i,
            "horizontal": [
                {"level": lv, "cycles": c, "classes": k} for lv, (c, k) in sorted(horiz.items())
            ],
            "vertical": [
                {
                    "middle_level": lv,
                    "cycles": c,
                    "classes": k,
                    "class_size": min(sizes) if len(sizes) == 1 else sorted(sizes),
                }
                for lv, (c, k, sizes) in sorted(vert.items())
            ],
        })
    vertical_total = sum(v["classes"] for e in per_i for v in e["vertical"])
    horizontal_total = sum(h["classes"] for e in per_i for h in e["horizontal"])
    return ClassReport(n, per_i, len(classes), vertical_total, horizontal_total, classes)


def vertical_classes_at_level(n: int, level: int) -> int:
    """``(n-1)! / (2 (level-2)! (n-level-1)!)``."""
    return factorial(n - 1) // (2 * factorial(level - 2) * factorial(n - level - 1))


def vertical_class_size(n: int, level: int) -> int:
    return factorial(level - 2) * factorial(n - level - 1)


def vertical_total_formula(n: int) -> int:
    return 2 ** (n - 3) * comb(n - 1, 2)


def rank_formula(n: int) -> int:
    """``2^(n-3) (n^2 - 5n + 8) - 1``, checked against its partial-sum form."""
    if n < 1:
        raise ValueError("n must be positive")
    closed = Fraction(2) ** (n - 3) * (n * n - 5 * n + 8) - 1
    partial = sum(Fraction(2) ** (k - 3) * comb(k - 1, 2) for k in range(1, n + 1))
    if closed != partial or closed.denominator != 1:
        raise ArithmeticError(f"closed form {closed} and partial sum {partial} disagree")
    return int(closed)


def recursion_check(n: int, report: ClassReport | None = None) -> bool:
    """``rank(n) == rank(n-1) + number of vertical classes of Gamma(B_n)``."""
    if n < 4:
        raise ValueError("n must be at least 4")
    report = report or equivalence_classes(n)
    return rank_formula(n) == rank_formula(n - 1) + report.vertical_total


def loop_word(c: SixCycle, path: Sequence[int] = ()) -> tuple[int, ...]:
    """``path (s_i s_{i+1})^3 reverse(path)``."""
    path = tuple(path)
    return path + c.word + path[::-1]


def homotopy_certificate(
    c1: SixCycle,
    c2: SixCycle,
    moves: Sequence[int],
    base_path: Sequence[int] = (),
) -> tuple[BasedWord, BasedWord]:
    """Based loop-words witnessing ``c1 ~ c2``.

    ``base_path`` leads from the base permutation to ``c1.rep``.  The first
    word goes once around ``c1``; the second walks ``moves`` into ``c2``'s
    coset, goes around it along the same generators, and walks back.
    Check the pair with ``words_equivalent``.
    """
    n = c1.n
    if c2.n != n:
        raise ValueError("cycles live in different graphs")
    if c1.i != c2.i:
        raise ValueError(
            f"cycles use different generator pairs ({c1.i} vs {c2.i}); "
            "no homotopy exists, letter parities of their loop-words differ"
        )
    i = c1.i
    bad = [j for j in moves if j not in disjoint_generators(i, n)]
    if bad:
        raise ValueError(f"moves {bad} are not disjoint from s_{i}, s_{i + 1}")
    landing = c1.rep
    for j in moves:
        landing = landing.apply(j)
    if canonical_rep(landing, i) != c2.rep:
        raise ValueError(f"{c1.rep} * moves does not land in the coset of {c2.rep}")
    path = tuple(base_path)
    # base sits at c1.rep * reverse(path)
    base = c1.rep
    for j in reversed(path):
        base = base.apply(j)
    w1 = loop_word(c1, path)
    w2 = path + loop_word(c1, moves) + path[::-1]
    b1 = BasedWord(base, GenWord(w1, n))
    b2 = BasedWord(base, GenWord(w2, n))
    assert b1.is_loop() and b2.is_loop()
    return b1, b2


def parity_separates(w1: Sequence[int], w2: Sequence[int], n: int) -> bool:
    """True when some generator occurs with different parity in the two words."""
    return letter_parity(w1, n) != letter_parity(w2, n)


def is_identity_word(word: Sequence[int], n: int) -> bool:
    return evaluate_word(word, n) == Permutation.identity(n)
