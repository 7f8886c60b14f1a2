"""Exact integer linear algebra on sparse relation matrices.

Rows are ``{column: coefficient}`` dicts.  Rank is computed modulo two large
primes and escalated to fraction-free elimination over the integers when
the two disagree.
"""

from __future__ import annotations

import logging
from typing import Iterable, Mapping, Sequence

log = logging.getLogger(__name__)

DEFAULT_PRIMES = (2_147_483_647, 1_000_000_007)

SparseRow = Mapping[int, int]


class SparseIntMatrix:
    """Integer matrix stored as a list of sparse rows."""

    def __init__(self, rows: Iterable[SparseRow], ncols: int):
        self.rows = []
        for r in rows:
            row = {int(c): int(v) for c, v in r.items() if v}
            if any(not 0 <= c < ncols for c in row):
                raise ValueError("column index out of range")
            self.rows.append(row)
        self.ncols = ncols

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def to_dense(self) -> list[list[int]]:
        out = []
        for r in self.rows:
            d = [0] * self.ncols
            for c, v in r.items():
                d[c] = v
            out.append(d)
        return out


def rank_mod_p(rows: Iterable[SparseRow], ncols: int, p: int) -> int:
    """Row-echelon rank over GF(p).

    Each stored pivot row is normalised so that its smallest column has
    coefficient 1; incoming rows are reduced on their smallest column until
    it is new.  Stops as soon as the rank reaches ``ncols``.
    """
    pivots: dict[int, dict[int, int]] = {}
    for r in rows:
        row = {c: v % p for c, v in r.items() if v % p}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(row[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                break
            f = row[c]
            for k, v in piv.items():
                nv = (row.get(k, 0) - f * v) % p
                if nv:
                    row[k] = nv
                else:
                    del row[k]
        if len(pivots) == ncols:
            break
    return len(pivots)


def rank_exact(rows: Iterable[SparseRow], ncols: int) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on integers."""
    M = SparseIntMatrix(rows, ncols).to_dense()
    m = len(M)
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == m:
            break
        piv = next((i for i in range(rank, m) if M[i][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        pr = M[rank]
        a = pr[col]
        for i in range(rank + 1, m):
            row = M[i]
            b = row[col]
            for j in range(col, ncols):
                row[j] = (a * row[j] - b * pr[j]) // prev
        prev = a
        rank += 1
    return rank


def matrix_rank(
    rows: Sequence[SparseRow],
    ncols: int,
    primes: Sequence[int] = DEFAULT_PRIMES,
) -> tuple[int, str]:
    """Rank with a double-prime check; returns ``(rank, method)``."""
    p1, p2 = primes
    if p1 == p2:
        raise ValueError("the two primes must be distinct")
    r1 = rank_mod_p(rows, ncols, p1)
    r2 = rank_mod_p(rows, ncols, p2)
    if r1 == r2:
        return r1, "mod-p"
    log.warning("ranks mod %d and %d disagree (%d vs %d); escalating", p1, p2, r1, r2)
    return rank_exact(rows, ncols), "exact"


def smith_invariants(rows: Sequence[SparseRow], ncols: int, guard: int = 2000) -> list[int]:
    """Non-zero invariant factors of the matrix, in divisibility order."""
    if ncols > guard:
        raise ValueError(f"Smith form refused: {ncols} columns exceeds guard {guard}")
    A = SparseIntMatrix(rows, ncols).to_dense()
    m, n = len(A), ncols
    diag = []
    t = 0
    while t < min(m, n):
        # smallest non-zero entry in the remaining block as pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            a = A[t][t]
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // a
                    if q:
                        ri, rt = A[i], A[t]
                        for j in range(t, n):
                            if rt[j]:
                                ri[j] -= q * rt[j]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // a
                    if q:
                        for i in range(t, m):
                            if A[i][t]:
                                A[i][j] -= q * A[i][t]
                    if A[t][j]:
                        done = False
            if done:
                # the pivot must divide the whole remaining block
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % a),
                    None,
                )
                if bad is None:
                    break
                i, _ = bad
                for j in range(t, n):
                    A[t][j] += A[i][j]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            cands = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
            cands += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
            _, i, j = min(cands)
            if i != t:
                A[t], A[i] = A[i], A[t]
            if j != t:
                for row in A:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def hermite_rows(rows: Sequence[SparseRow], ncols: int) -> list[dict[int, int]]:
    """Row-style Hermite normal form of the integer row span.

    Returned rows have strictly increasing leading columns, positive
    leading entries, and entries above each leading entry reduced into
    ``[0, lead)``.
    """
    basis: dict[int, dict[int, int]] = {}
    for r in rows:
        row = {c: v for c, v in r.items() if v}
        while row:
            c = min(row)
            piv = basis.get(c)
            if piv is None:
                if row[c] < 0:
                    row = {k: -v for k, v in row.items()}
                basis[c] = row
                break
            a, b = piv[c], row[c]
            if b % a == 0:
                q = b // a
                row = _axpy(row, piv, -q)
                continue
            # gcd step: replace pivot by the combination with leading gcd
            g, x, y = _xgcd(a, b)
            new_piv = _lincomb(piv, x, row, y)
            row = _lincomb(piv, -b // g, row, a // g)
            basis[c] = new_piv
    cols = sorted(basis)
    for idx, c in enumerate(cols):
        piv = basis[c]
        for c2 in cols[:idx]:
            upper = basis[c2]
            v = upper.get(c, 0)
            q = v // piv[c]
            if q:
                basis[c2] = _axpy(upper, piv, -q)
    return [basis[c] for c in cols]


def reduce_mod_hermite(vec: SparseRow, hnf: Sequence[SparseRow]) -> dict[int, int]:
    """Canonical representative of ``vec`` modulo the integer span of ``hnf``."""
    out = {c: v for c, v in vec.items() if v}
    for piv in hnf:
        c = min(piv)
        v = out.get(c, 0)
        q = v // piv[c]
        if q:
            out = _axpy(out, piv, -q)
    return out


def _axpy(row: SparseRow, piv: SparseRow, f: int) -> dict[int, int]:
    out = dict(row)
    for k, v in piv.items():
        nv = out.get(k, 0) + f * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def _lincomb(r1: SparseRow, a: int, r2: SparseRow, b: int) -> dict[int, int]:
    out = {}
    for k in set(r1) | set(r2):
        v = a * r1.get(k, 0) + b * r2.get(k, 0)
        if v:
            out[k] = v
    return out


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0
