"""Discrete fundamental groups of chain graphs of posets, centred on the permutahedron."""

__version__ = "0.1.0"

from .graph import LabeledGraph, box_product, cycle_graph, path_graph
from .homotopy import (
    CycleBasis,
    RelationData,
    ShortCycle,
    a1_rank,
    cycle_coordinates,
    enumerate_short_cycles,
    h1_class,
    spanning_forest,
    torsion_check,
)
from .posets import (
    GradedPoset,
    SizeCapError,
    boolean_lattice,
    edge_class,
    gamma_graph,
    maximal_chains,
    permutahedron_graph,
)
from .shuffle import intermediate_graph, prune_edges, shuffle_graph, triple_to_permutation
from .sixcycles import (
    SixCycle,
    enumerate_six_cycles,
    equivalence_classes,
    homotopy_certificate,
    orientation,
    rank_formula,
    recursion_check,
)
from .words import (
    BasedWord,
    GenWord,
    InconclusiveSearch,
    Permutation,
    apply_generator,
    bfs_oracle_equivalent,
    evaluate_word,
    racg_normal_form,
    words_equivalent,
)
