from math import comb

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from a1graphs.graph import LabeledGraph, path_graph
from a1graphs.posets import StructureError, boolean_lattice, top_gamma_graph
from a1graphs.shuffle import (
    ShuffleVertex,
    dual_sequence,
    edge_type_counts,
    intermediate_graph,
    product_chain,
    product_gamma_graph,
    prune_edges,
    shuffle_graph,
    triple_to_permutation,
)
from a1graphs.words import Permutation

from conftest import product_poset, to_nx


def _dual_brute(kappa, l):
    # lambda_j counts the C1 steps taken before the j-th C2 step
    return tuple(sum(1 for a in kappa if a < j) for j in range(1, l + 1))


@given(st.integers(0, 6), st.integers(0, 6), st.data())
def test_duality_is_an_involution(k, l, data):
    kappa = tuple(sorted(data.draw(st.lists(st.integers(0, l), min_size=k, max_size=k))))
    lam = dual_sequence(kappa, l)
    assert lam == _dual_brute(kappa, l)
    assert all(0 <= b <= k for b in lam)
    assert list(lam) == sorted(lam)
    assert dual_sequence(lam, k) == kappa


def test_shuffle_vertex_validation():
    ShuffleVertex((0, 1), (1,))
    with pytest.raises(ValueError):
        ShuffleVertex((1, 0), (1,))
    with pytest.raises(ValueError):
        ShuffleVertex((0, 1), (0,))
    with pytest.raises(ValueError):
        ShuffleVertex((3,), (0,))


def test_shuffle_graph_k3_l1_is_path():
    g = shuffle_graph(3, 1)
    assert nx.is_isomorphic(to_nx(g), to_nx(path_graph(3)))


def test_shuffle_graph_k3_l2():
    g = shuffle_graph(3, 2)
    assert g.n_vertices == 10
    # vertices are lattice paths in a 3x2 grid; moves swap one adjacent pair of steps
    assert nx.is_connected(to_nx(g))


@pytest.mark.parametrize("k,l", [(k, l) for k in range(5) for l in range(5) if k + l <= 8])
def test_shuffle_graph_is_symmetric_in_k_l(k, l):
    a, b = shuffle_graph(k, l), shuffle_graph(l, k)
    assert a.n_vertices == b.n_vertices == comb(k + l, k)
    assert nx.is_isomorphic(to_nx(a), to_nx(b))


def test_intermediate_vertex_counts():
    cases = {(2, 1): 6, (3, 1): 24, (2, 2): 24, (1, 1): 2}
    for (a, b), count in cases.items():
        gt = intermediate_graph(boolean_lattice(a), boolean_lattice(b))
        assert gt.n_vertices == count


def test_b1_times_b1():
    g = product_gamma_graph(boolean_lattice(1), boolean_lattice(1))
    assert g.n_vertices == 2 and g.n_edges == 1
    assert edge_type_counts(g) == {1: 1, 2: 0, 3: 0}


def test_edge_types_for_b3_times_b1():
    # hexagon x point x path of 4: 6*3 shuffle moves, 6 edges * 4 shuffles of type 3
    gt = intermediate_graph(boolean_lattice(3), boolean_lattice(1))
    assert edge_type_counts(gt) == {1: 18, 2: 0, 3: 24}
    assert prune_edges(gt).n_edges == 36


@pytest.mark.parametrize("a,b", [(1, 1), (2, 1), (3, 1), (2, 2), (4, 1), (3, 2)])
def test_pruned_graph_equals_gamma_of_product_poset(a, b):
    L1, L2 = boolean_lattice(a), boolean_lattice(b)
    pruned = product_gamma_graph(L1, L2)
    ref = top_gamma_graph(product_poset(L1, L2))
    chains = [product_chain(v, L1, L2) for v in pruned.labels]
    assert len(set(chains)) == len(chains) == ref.n_vertices
    mine = {frozenset((chains[u], chains[v])) for u, v in pruned.edges}
    theirs = {frozenset((ref.labels[u], ref.labels[v])) for u, v in ref.edges}
    assert mine == theirs


def test_prune_requires_metadata():
    bare = LabeledGraph.from_edges(range(2), [(0, 1)])
    with pytest.raises(StructureError):
        prune_edges(bare)


def test_triple_to_permutation_examples():
    g = intermediate_graph(boolean_lattice(3), boolean_lattice(1))
    by_text = {v.serialize(): v for v in g.labels}
    # chain {1} < {1,2}; every B_3 step after the B_1 step puts 4 first
    v = by_text["1,3||1,1,1"]
    assert triple_to_permutation(v, 4) == Permutation.parse("4123")
    v = by_text["1,3||0,0,0"]
    assert triple_to_permutation(v, 4) == Permutation.parse("1234")
    v = by_text["1,3||0,1,1"]
    assert triple_to_permutation(v, 4) == Permutation.parse("1423")


def test_triple_to_permutation_is_bijective():
    for n in (3, 4, 5):
        g = product_gamma_graph(boolean_lattice(n - 1), boolean_lattice(1))
        perms = {triple_to_permutation(v, n) for v in g.labels}
        assert len(perms) == g.n_vertices
