"""Permutations, words over simple transpositions, and word equivalence.

Generators are 1-based: ``s_j`` swaps positions ``j`` and ``j+1`` of a
permutation written in one-line notation (right action).  Two words are
equivalent when one can be turned into the other by inserting/deleting a
square ``s_j s_j`` and by swapping adjacent letters ``s_j s_k`` with
``|j - k| >= 2``.  That is the word problem of the right-angled Coxeter
group on ``s_1 .. s_{n-1}``, which is solved here by reduction to a
geodesic followed by a lexicographic normal form on its commutation class.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class InconclusiveSearch(RuntimeError):
    """The bounded search ran out of budget before reaching a verdict."""


def commute(a: int, b: int) -> bool:
    """True for distinct generators that commute (``|a - b| >= 2``)."""
    return abs(a - b) >= 2


def _check_letters(letters: Iterable[int], n: int | None) -> None:
    for j in letters:
        if j < 1 or (n is not None and j > n - 1):
            raise ValueError(f"generator index {j} out of range for n={n}")


# ----------------------------------------------------------------------
# permutations
# ----------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of ``{1..n}`` in one-line notation."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"not a permutation of 1..{len(entries)}: {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        text = text.strip()
        if "," in text:
            return cls(tuple(int(x) for x in text.split(",")))
        return cls(tuple(int(c) for c in text))

    @property
    def n(self) -> int:
        return len(self.entries)

    def apply(self, j: int) -> Permutation:
        """Right multiplication by ``s_j``."""
        return apply_generator(self, j)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for pos, val in enumerate(self.entries, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def position(self, value: int) -> int:
        """1-based position of ``value``, i.e. ``sigma^{-1}(value)``."""
        return self.entries.index(value) + 1

    @property
    def level(self) -> int:
        return self.position(self.n)

    def parity(self) -> int:
        """0 for even permutations, 1 for odd."""
        inversions = sum(
            1
            for a in range(self.n)
            for b in range(a + 1, self.n)
            if self.entries[a] > self.entries[b]
        )
        return inversions % 2

    def __mul__(self, other: Permutation) -> Permutation:
        # (self * other)(x) = self(other(x)); right-to-left composition
        if other.n != self.n:
            raise ValueError("size mismatch")
        return Permutation(tuple(self.entries[other.entries[i] - 1] for i in range(self.n)))

    def __str__(self) -> str:
        return format_permutation(self)


def format_permutation(p: Permutation) -> str:
    if p.n <= 9:
        return "".join(str(x) for x in p.entries)
    return ",".join(str(x) for x in p.entries)


def apply_generator(p: Permutation, j: int) -> Permutation:
    """Swap the entries at positions ``j`` and ``j+1`` of ``p``."""
    if not 1 <= j <= p.n - 1:
        raise ValueError(f"generator index {j} out of range for n={p.n}")
    e = list(p.entries)
    e[j - 1], e[j] = e[j], e[j - 1]
    return Permutation(tuple(e))


def evaluate_word(word: Sequence[int], n: int) -> Permutation:
    """Apply the letters of ``word`` left to right starting at the identity."""
    _check_letters(word, n)
    e = list(range(1, n + 1))
    for j in word:
        e[j - 1], e[j] = e[j], e[j - 1]
    return Permutation(tuple(e))


# ----------------------------------------------------------------------
# words
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class GenWord:
    """A word in the simple transpositions ``s_1 .. s_{n-1}``."""

    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(j) for j in self.letters))
        _check_letters(self.letters, self.n)

    @classmethod
    def parse(cls, text: str, n: int) -> GenWord:
        return cls(parse_word(text), n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __mul__(self, other: GenWord) -> GenWord:
        return GenWord(self.letters + other.letters, max(self.n, other.n))

    def reverse(self) -> GenWord:
        """The inverse word; every generator is an involution."""
        return GenWord(self.letters[::-1], self.n)

    def normal_form(self) -> GenWord:
        return GenWord(racg_normal_form(self.letters), self.n)

    def evaluate(self) -> Permutation:
        return evaluate_word(self.letters, self.n)

    def parity_vector(self) -> tuple[int, ...]:
        return letter_parity(self.letters, self.n)

    def __str__(self) -> str:
        return format_word(self.letters)


@dataclass(frozen=True)
class BasedWord:
    """A word read as a walk in the permutation graph starting at ``base``."""

    base: Permutation
    word: GenWord

    def walk(self) -> list[Permutation]:
        out = [self.base]
        for j in self.word:
            out.append(out[-1].apply(j))
        return out

    def end(self) -> Permutation:
        return self.walk()[-1]

    def is_loop(self) -> bool:
        return self.end() == self.base

    def equivalent(self, other: BasedWord) -> bool:
        return self.base == other.base and words_equivalent(self.word, other.word)


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(j) for j in word)


def parse_word(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.replace(",", " ").split())


def letter_parity(word: Sequence[int], n: int) -> tuple[int, ...]:
    """Parity of the number of occurrences of each ``s_1 .. s_{n-1}``."""
    counts = [0] * (n - 1)
    for j in word:
        counts[j - 1] ^= 1
    return tuple(counts)


def reduce_word(word: Sequence[int]) -> list[int]:
    """Shorten ``word`` to a geodesic in the right-angled Coxeter group.

    Letters are pushed one at a time onto a reduced prefix.  An incoming
    ``s_j`` cancels against the last ``s_j`` of the prefix when every letter
    after that occurrence commutes with it; otherwise it is appended.  A
    reduced prefix stays reduced under either outcome.
    """
    out: list[int] = []
    for x in word:
        p = len(out) - 1
        while p >= 0 and out[p] != x and commute(out[p], x):
            p -= 1
        if p >= 0 and out[p] == x:
            del out[p]
        else:
            out.append(x)
    return out


def racg_normal_form(word: Sequence[int]) -> tuple[int, ...]:
    """Canonical geodesic representative of ``word``.

    From the geodesic, the smallest generator that can be commuted to the
    front is emitted first, repeatedly.  Geodesics of one group element
    differ only by commutations, so the output is unique per element.
    """
    rest = reduce_word(word)
    out = []
    while rest:
        best = None
        for p, x in enumerate(rest):
            if best is not None and x >= rest[best]:
                continue
            if all(commute(y, x) for y in rest[:p]):
                best = p
        out.append(rest.pop(best))
    return tuple(out)


def words_equivalent(w1: Sequence[int], w2: Sequence[int]) -> bool:
    return racg_normal_form(w1) == racg_normal_form(w2)


# ----------------------------------------------------------------------
# brute-force oracle
# ----------------------------------------------------------------------


def word_moves(word: tuple[int, ...], n: int, max_len: int) -> Iterator[tuple[int, ...]]:
    """Words one move away: delete/insert ``s_j s_j``, swap commuting neighbours."""
    L = len(word)
    for p in range(L - 1):
        a, b = word[p], word[p + 1]
        if a == b:
            yield word[:p] + word[p + 2:]
        elif commute(a, b):
            yield word[:p] + (b, a) + word[p + 2:]
    if L + 2 <= max_len:
        for p in range(L + 1):
            for j in range(1, n):
                yield word[:p] + (j, j) + word[p:]


def default_oracle_bound(w1: Sequence[int], w2: Sequence[int]) -> int:
    return len(w1) + len(w2) + 4


def reachable_words(
    start: Sequence[int],
    n: int,
    max_len: int,
    budget: int = 500_000,
    target: tuple[int, ...] | None = None,
) -> set[tuple[int, ...]]:
    """All words reachable from ``start`` by single moves within ``max_len`` letters.

    Stops early once ``target`` is reached.  Raises ``InconclusiveSearch``
    when more than ``budget`` words would have to be stored.
    """
    start = tuple(start)
    _check_letters(start, n)
    if len(start) > max_len:
        raise ValueError("start word longer than the search bound")
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        if w == target:
            break
        for v in word_moves(w, n, max_len):
            if v not in seen:
                seen.add(v)
                if v == target:
                    return seen
                if len(seen) > budget:
                    raise InconclusiveSearch(
                        f"more than {budget} words within length {max_len}"
                    )
                queue.append(v)
    return seen


def bfs_oracle_equivalent(
    w1: Sequence[int],
    w2: Sequence[int],
    max_len: int | None = None,
    n: int | None = None,
    budget: int = 500_000,
) -> bool:
    """Decide equivalence by exhaustive search over T2/T3 moves.

    Sound always; complete for paths that stay within ``max_len`` letters.
    ``n`` defaults to one more than the largest letter present.
    Raises ``InconclusiveSearch`` when the budget is exhausted.
    """
    w1, w2 = tuple(w1), tuple(w2)
    if max_len is None:
        max_len = default_oracle_bound(w1, w2)
    if max_len < max(len(w1), len(w2)):
        raise ValueError("max_len must be at least the length of both words")
    if n is None:
        n = max(w1 + w2 + (1,)) + 1
    if w1 == w2:
        return True
    return w2 in reachable_words(w1, n, max_len, budget=budget, target=w2)
