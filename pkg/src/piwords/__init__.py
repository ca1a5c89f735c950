"""Graphs represented by two words: {a, b} is an edge iff both words project
onto {a, b} identically."""

from .classes import (
    CoComplement,
    CoUnion,
    Leaf,
    cograph_words,
    complement_pair,
    cycle_words,
    near_permutation_words,
    permutation_words,
    recognize_permutation_graph_small,
    twelve_decode,
    twelve_to_pair,
)
from .construction import (
    IndependentEdgeSets,
    coloring_to_sets,
    construct_colored,
    construct_naive,
    delete_independent_edges,
    remove_edge,
    verify_ies,
)
from .graphs import Graph, complement, graph_join, graph_union, permutation_graph
from .operations import add_isolated_vertex, add_universal_vertex, join_pairs, union_pairs
from .representation import brute_force_find_pair, decode, min_uniformity, verify
from .words import WordPair, parse_word, projection

__version__ = "0.1.0"
