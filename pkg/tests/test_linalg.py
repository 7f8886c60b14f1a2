import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import invariant_factors

from a1graphs.linalg import (
    SparseIntMatrix,
    hermite_rows,
    matrix_rank,
    rank_exact,
    rank_mod_p,
    reduce_mod_hermite,
    smith_invariants,
)


def sparse(dense):
    return [{j: v for j, v in enumerate(r) if v} for r in dense]


matrices = st.integers(1, 7).flatmap(
    lambda ncols: st.lists(
        st.lists(st.integers(-4, 4), min_size=ncols, max_size=ncols), min_size=1, max_size=8
    ).map(lambda rows: (rows, ncols))
)


@given(matrices)
def test_rank_methods_agree_with_sympy(m):
    dense, ncols = m
    ref = sympy.Matrix(dense).rank()
    rows = sparse(dense)
    assert rank_exact(rows, ncols) == ref
    assert rank_mod_p(rows, ncols, 2_147_483_647) == ref
    assert matrix_rank(rows, ncols) == (ref, "mod-p")


def test_small_prime_disagreement_escalates():
    # determinant 6 vanishes mod 2 and mod 3
    rows = sparse([[2, 0], [0, 3]])
    assert rank_mod_p(rows, 2, 2) == 1
    assert matrix_rank(rows, 2, primes=(2, 5)) == (2, "exact")
    with pytest.raises(ValueError):
        matrix_rank(rows, 2, primes=(5, 5))


@settings(deadline=None)
@given(matrices)
def test_smith_invariants_match_sympy(m):
    dense, ncols = m
    ref = [abs(int(x)) for x in invariant_factors(sympy.Matrix(dense), domain=sympy.ZZ) if x != 0]
    assert smith_invariants(sparse(dense), ncols) == ref


def test_smith_example_with_torsion():
    assert smith_invariants(sparse([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]), 3) == [2, 6, 12]


def test_smith_guard():
    with pytest.raises(ValueError):
        smith_invariants([], 5, guard=4)


@given(matrices, st.data())
def test_hermite_reduction_is_canonical(m, data):
    dense, ncols = m
    rows = sparse(dense)
    hnf = hermite_rows(rows, ncols)
    assert len(hnf) == sympy.Matrix(dense).rank()
    leads = [min(r) for r in hnf]
    assert leads == sorted(set(leads)) and all(r[min(r)] > 0 for r in hnf)
    # every generator reduces to zero
    assert all(reduce_mod_hermite(r, hnf) == {} for r in rows)
    # adding any lattice vector leaves the representative unchanged
    v = data.draw(st.lists(st.integers(-5, 5), min_size=ncols, max_size=ncols))
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=len(dense), max_size=len(dense)))
    shifted = [v[j] + sum(c * r[j] for c, r in zip(coeffs, dense)) for j in range(ncols)]
    red = lambda x: reduce_mod_hermite({j: a for j, a in enumerate(x) if a}, hnf)
    assert red(v) == red(shifted)


def test_sparse_matrix_validation():
    M = SparseIntMatrix([{0: 1, 2: 0}], 3)
    assert M.to_dense() == [[1, 0, 0]]
    with pytest.raises(ValueError):
        SparseIntMatrix([{3: 1}], 3)
