import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from a1graphs.graph import box_product, cycle_graph, path_graph
from a1graphs.homotopy import (
    RelationData,
    a1_rank,
    cycle_coordinates,
    enumerate_short_cycles,
    h1_class,
    spanning_forest,
    torsion_check,
)
from a1graphs.linalg import rank_exact
from a1graphs.posets import boolean_lattice, gamma_graph, permutahedron_graph
from a1graphs.words import Permutation

from conftest import brute_short_cycles, from_nx


def test_spanning_forest_dimension_matches_networkx():
    for G in (nx.petersen_graph(), nx.complete_graph(5), nx.disjoint_union(nx.cycle_graph(5), nx.path_graph(3))):
        g = from_nx(G)
        basis = spanning_forest(g)
        assert basis.dimension == G.number_of_edges() - G.number_of_nodes() + nx.number_connected_components(G)
        assert basis.dimension == len(nx.cycle_basis(G))


@pytest.mark.parametrize("name", ["petersen", "k4", "b4", "grid", "b3xc5"])
def test_short_cycles_match_brute_force(name):
    g = {
        "petersen": from_nx(nx.petersen_graph()),
        "k4": from_nx(nx.complete_graph(4)),
        "b4": permutahedron_graph(4),
        "grid": box_product(path_graph(3), path_graph(2)),
        "b3xc5": box_product(permutahedron_graph(3), cycle_graph(5)),
    }[name]
    tri, quad = brute_short_cycles(g)
    found = enumerate_short_cycles(g)
    assert sum(len(c) == 3 for c in found) == len(tri)
    assert sum(len(c) == 4 for c in found) == len(quad)
    assert len({c.vertices for c in found}) == len(found)


def test_short_cycle_counts():
    k4 = enumerate_short_cycles(from_nx(nx.complete_graph(4)))
    assert sorted(len(c) for c in k4) == [3, 3, 3, 3, 4, 4, 4]
    assert sum(len(c) == 4 for c in enumerate_short_cycles(permutahedron_graph(4))) == 6
    assert enumerate_short_cycles(from_nx(nx.petersen_graph())) == []


def test_hexagon_coordinates():
    g = cycle_graph(6)
    basis = spanning_forest(g)
    coords = cycle_coordinates(list(range(6)) + [0], basis)
    assert [abs(c) for c in coords] == [1]
    back = cycle_coordinates([0, 5, 4, 3, 2, 1, 0], basis)
    assert back == [-c for c in coords]


def test_cycle_coordinates_reject_non_walks():
    basis = spanning_forest(cycle_graph(6))
    with pytest.raises(ValueError):
        cycle_coordinates([0, 2, 0], basis)
    with pytest.raises(ValueError):
        cycle_coordinates([0, 1, 2], basis)


def test_simple_graph_ranks(petersen):
    assert a1_rank(petersen) == 6
    assert a1_rank(from_nx(nx.complete_graph(5))) == 0
    assert a1_rank(path_graph(4)) == 0


def test_rank_is_additive_over_components():
    G = nx.disjoint_union(nx.cycle_graph(7), nx.cycle_graph(4))
    G = nx.disjoint_union(G, nx.petersen_graph())
    assert a1_rank(from_nx(G)) == 1 + 0 + 6


@pytest.mark.parametrize(
    "a,b,expected",
    [("c5", "c6", 2), ("b3", "c5", 2), ("b3", "b3", 2), ("b4", "c5", 8), ("c7", "i2", 1)],
)
def test_box_product_additivity(a, b, expected):
    graphs = {
        "c5": cycle_graph(5), "c6": cycle_graph(6), "c7": cycle_graph(7),
        "b3": permutahedron_graph(3), "b4": permutahedron_graph(4), "i2": path_graph(2),
    }
    g = box_product(graphs[a], graphs[b])
    assert a1_rank(g) == a1_rank(graphs[a]) + a1_rank(graphs[b]) == expected


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_rank_invariant_under_relabelling(seed):
    rng = random.Random(seed)
    g = permutahedron_graph(4) if seed % 2 else from_nx(nx.petersen_graph())
    perm = list(range(g.n_vertices))
    rng.shuffle(perm)
    assert a1_rank(g.relabel(perm)) == a1_rank(g)


@settings(max_examples=30, deadline=None)
@given(st.integers(6, 18), st.floats(0.1, 0.5), st.integers(0, 10**6))
def test_random_graphs_modp_matches_exact(n, p, seed):
    g = from_nx(nx.gnp_random_graph(n, p, seed=seed))
    data = RelationData(g)
    dim = data.basis.dimension
    assert dim <= 200
    exact = rank_exact(data.rows, dim)
    assert data.relation_rank() == exact
    assert 0 <= dim - exact <= dim
    # a rank that ignores components would differ on disconnected samples
    assert dim == g.n_edges - g.n_vertices + len(g.components())


@pytest.mark.parametrize("n", [3, 4, 5])
def test_modp_matches_exact_on_permutahedra(n):
    data = RelationData(permutahedron_graph(n))
    assert data.basis.dimension <= 200
    assert data.relation_rank() == rank_exact(data.rows, data.basis.dimension)


def test_rank_through_chain_graph_and_lower_q():
    assert a1_rank(gamma_graph(boolean_lattice(4), 1)) == 7
    assert a1_rank(gamma_graph(boolean_lattice(4), 0)) == 0
    assert a1_rank(gamma_graph(boolean_lattice(5), 1)) == 0


def test_torsion_free_permutahedra():
    assert torsion_check(permutahedron_graph(4)) == [1] * 6
    with pytest.raises(ValueError):
        torsion_check(permutahedron_graph(5), guard=10)


def test_h1_class_detects_homologous_walks():
    g = box_product(cycle_graph(5), path_graph(1))
    # the two copies of the 5-cycle are joined by squares
    bottom = [0, 2, 4, 6, 8, 0]
    top = [1, 3, 5, 7, 9, 1]
    assert h1_class(bottom, g) == h1_class(top, g)
    assert h1_class(bottom, g) != h1_class(bottom[::-1], g)
    assert not any(h1_class([0, 1, 3, 2, 0], g))


def test_h1_class_accepts_relation_data():
    g = permutahedron_graph(4)
    data = RelationData(g)
    square = [g.index[p] for p in map(Permutation.parse, "1234 2134 2143 1243 1234".split())]
    assert h1_class(square, data) == h1_class(square, g)
    assert not any(h1_class(square, data))
