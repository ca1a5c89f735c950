import pytest
from hypothesis import given

from conftest import graphs, uniform_pairs
from piwords.construction import construct_naive
from piwords.graphs import Graph, complete_graph, empty_graph, graph_join, graph_union
from piwords.operations import add_isolated_vertex, add_universal_vertex, join_pairs, union_pairs
from piwords.representation import decode
from piwords.words import WordPair

P = WordPair.parse("adbc", "bacd")
Q = WordPair.parse("eghf", "hgef")
GP = Graph.from_edges(["ad", "ac", "bc"], "abcd")
GQ = Graph.from_edges(["ef", "fg", "fh"], "efgh")


def test_operands_decode():
    assert decode(P) == GP
    assert decode(Q) == GQ


def test_join_example():
    j = join_pairs(P, Q)
    assert j == WordPair.parse("adbceghf", "bacdhgef")
    assert decode(j) == graph_join(GP, GQ)
    assert join_pairs(("a", "a"), ("b", "b")) == WordPair.parse("ab", "ab")


def test_union_example():
    u = union_pairs(P, Q)
    assert u == WordPair.parse("adbceghf", "hgefbacd")
    assert decode(u) == graph_union(GP, GQ)
    assert union_pairs(("a", "a"), ("b", "b")) == WordPair.parse("ab", "ba")


def test_vertex_insertion_examples():
    uni = add_universal_vertex(P, "x")
    assert uni == WordPair.parse("adbcx", "bacdx")
    g = decode(uni)
    assert g.induced("abcd") == GP and g.degree("x") == 4
    iso = add_isolated_vertex(P, "e")
    assert iso == WordPair.parse("adbce", "ebacd")
    assert decode(iso) == graph_union(GP, empty_graph("e"))
    assert decode(add_universal_vertex(("a", "a"), "b")) == complete_graph("ab")
    assert decode(add_isolated_vertex(("a", "a"), "b")) == empty_graph("ab")


def test_errors():
    with pytest.raises(ValueError, match="overlap"):
        join_pairs(P, P)
    with pytest.raises(ValueError, match="overlap"):
        union_pairs(P, ("a", "a"))
    with pytest.raises(ValueError, match="'b'"):
        join_pairs(("abbc", "abc"), ("x", "x"))
    with pytest.raises(ValueError, match="already"):
        add_universal_vertex(P, "a")
    with pytest.raises(ValueError, match="already"):
        add_isolated_vertex(P, "a")


def test_join_needs_balanced_counts():
    # without the count condition the identity fails: b loses its edge to x
    w, v = ("a", "b", "b", "c"), ("a", "b", "c")
    assert not decode((w + ("x",), v + ("x",))).has_edge("b", "x")


@given(graphs(max_vertices=5, letters="abcde"), graphs(max_vertices=5, letters="vwxyz"))
def test_operations_match_graph_level(g, h):
    p, q = construct_naive(g), construct_naive(h)
    assert decode(join_pairs(p, q)) == graph_join(g, h)
    u = union_pairs(p, q)
    assert decode(u) == graph_union(g, h)
    assert decode(u).induced(g.vertices) == g


@given(uniform_pairs(k=2, max_letters=3), uniform_pairs(k=2, max_letters=3))
def test_uniformity_preserved(p, q):
    q = tuple(tuple(a.upper() for a in w) for w in q)
    assert join_pairs(p, q).uniformity() == 2
    assert union_pairs(p, q).uniformity() == 2


@given(graphs(max_vertices=3, letters="abc"), graphs(max_vertices=3, letters="def"), graphs(max_vertices=3, letters="ghi"))
def test_union_associative(g, h, k):
    p, q, r = (construct_naive(x) for x in (g, h, k))
    assert decode(union_pairs(union_pairs(p, q), r)) == decode(union_pairs(p, union_pairs(q, r)))
