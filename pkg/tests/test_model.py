import networkx as nx
import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cutcomplex.complexes.model import Graph, SimplicialComplex
from cutcomplex.complexes.model import complement, complete_graph
from cutcomplex.complexes.model import complex_from_cofacets
from cutcomplex.complexes.model import complex_from_facets, empty_graph
from cutcomplex.complexes.model import graph_from_edges, is_connected
from cutcomplex.complexes.model import vertex_set
from tests.strategies import graphs, to_networkx


def test_graph_from_edges_dedups_and_symmetrizes():
    graph = graph_from_edges(4, [(1, 2), (1, 2), (2, 1)])
    assert graph.edges() == [(1, 2)]
    assert graph.has_edge(2, 1)
    assert graph.neighborhood(3) == frozenset()


def test_empty_graph_has_no_edges():
    assert empty_graph(3).edges() == []
    assert empty_graph(3).num_edges == 0


@pytest.mark.parametrize(
    "edges", [[(1, 6)], [(0, 1)], [(2, 2)]], ids=["high", "low", "loop"]
)
def test_graph_from_edges_rejects_bad_edges(edges):
    with pytest.raises(ValueError):
        graph_from_edges(5, edges)


def test_graph_rejects_asymmetric_adjacency():
    adj = np.zeros((3, 3), dtype=bool)
    adj[0, 1] = True
    with pytest.raises(ValueError, match="symmetric"):
        Graph(3, adj)


def test_vertex_set_range():
    assert vertex_set([3, 1], 3) == frozenset({1, 3})
    with pytest.raises(ValueError):
        vertex_set([4], 3)


def test_edge_mask_follows_lexicographic_slots(c5):
    # slots 12 13 14 15 23 24 25 34 35 45; C5 uses 0, 3, 4, 7, 9
    assert c5.edge_mask() == 1 + 8 + 16 + 128 + 512


def test_is_connected_examples(c5):
    assert not is_connected(c5, {2, 4, 5})
    assert is_connected(c5, {3})
    assert is_connected(c5, {1, 2, 3, 4})
    assert not is_connected(empty_graph(3), {1, 2, 3})
    with pytest.raises(ValueError):
        is_connected(c5, set())


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, max_n=8), st.data())
def test_is_connected_matches_networkx(graph, data):
    members = data.draw(
        st.sets(st.sampled_from(list(graph.vertices)), min_size=1)
    )
    expected = nx.is_connected(to_networkx(graph).subgraph(members))
    assert is_connected(graph, members) == expected


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=2, max_n=8), st.data())
def test_adding_an_edge_keeps_sets_connected(graph, data):
    non_edges = complement(graph).edges()
    assume(non_edges)
    u, v = data.draw(st.sampled_from(non_edges))
    members = data.draw(
        st.sets(st.sampled_from(list(graph.vertices)), min_size=1)
    )
    if is_connected(graph, members):
        assert is_connected(graph.toggle_edge(u, v), members)


def test_complement_examples(c5):
    assert complement(complete_graph(3)) == empty_graph(3)
    assert complement(c5).edges() == [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_complement_is_an_involution(graph):
    assert complement(complement(graph)) == graph
    assert graph.num_edges + complement(graph).num_edges == (
        graph.n * (graph.n - 1) // 2
    )


def test_toggle_and_with_edges(c5):
    toggled = c5.toggle_edge(1, 3)
    assert toggled.has_edge(1, 3)
    assert not c5.has_edge(1, 3)
    edited = c5.with_edges(add=[(1, 3)], remove=[(1, 2)])
    assert edited.edges() == [(1, 3), (1, 5), (2, 3), (3, 4), (4, 5)]
    with pytest.raises(ValueError):
        c5.toggle_edge(2, 2)


def test_restrict_keeps_low_labels(c6):
    assert c6.restrict(4).edges() == [(1, 2), (2, 3), (3, 4)]


def test_complex_from_facets_lenient_and_strict():
    cplx = complex_from_facets(4, [{1, 2}, {3, 4}])
    assert cplx.facets == [frozenset({1, 2}), frozenset({3, 4})]
    lenient = complex_from_facets(4, [{1, 2}, {1}])
    assert lenient.facets == [frozenset({1, 2})]
    with pytest.raises(ValueError):
        complex_from_facets(4, [{1, 2}, {1}], strict=True)
    with pytest.raises(ValueError):
        complex_from_facets(4, [{1, 2}, {1, 2}], strict=True)


def test_complex_from_cofacets_keeps_minimal_sets():
    cplx = complex_from_cofacets(4, [{1, 2}, {1, 2, 3}])
    assert cplx.cofacets == [frozenset({1, 2})]
    assert cplx.facets == [frozenset({3, 4})]


def test_complexes_equal_is_order_free_and_checks_ambient():
    first = SimplicialComplex(4, [{1, 2}, {3, 4}])
    second = SimplicialComplex(4, [{3, 4}, {1, 2}])
    assert first == second
    assert SimplicialComplex(4, [{1, 2}]) != SimplicialComplex(5, [{1, 2}])


def test_complexes_equal_across_storage_forms():
    plain = SimplicialComplex(5, [{1, 3}, {2, 4}])
    stored = SimplicialComplex(5, [{2, 4, 5}, {1, 3, 5}], complemented=True)
    assert plain == stored
    assert hash(plain) == hash(stored)


def test_with_ambient_keeps_facets():
    cplx = SimplicialComplex(3, [{1, 2}, {1, 3}], complemented=False)
    lifted = cplx.with_ambient(5)
    assert lifted.n == 5
    assert lifted.facets == cplx.facets
    stored = SimplicialComplex(3, [{3}], complemented=True)
    assert stored.with_ambient(5).cofacets == [frozenset({3, 4, 5})]
    with pytest.raises(ValueError):
        cplx.with_ambient(2)


def test_support_and_intersection():
    cplx = SimplicialComplex(5, [{1, 2}, {1, 3}])
    assert cplx.support() == frozenset({1, 2, 3})
    assert cplx.facet_intersection() == frozenset({1})
    assert cplx.dimension == 1
    assert SimplicialComplex(5, []).dimension is None
