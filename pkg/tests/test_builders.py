import itertools
import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cutcomplex.complexes.builders import TriConnectivityTable
from cutcomplex.complexes.builders import bar_complement, bar_complex
from cutcomplex.complexes.builders import cut_complex, cut_mask
from cutcomplex.complexes.builders import independent_mask, pure_dimension
from cutcomplex.complexes.builders import total_cut_complex
from cutcomplex.complexes.builders import tri_connectivity_table
from cutcomplex.complexes.builders import triple_edge_counts
from cutcomplex.complexes.model import Graph, SimplicialComplex, complement
from cutcomplex.complexes.model import complete_graph, empty_graph
from cutcomplex.complexes.model import subset_index
from cutcomplex.complexes.shared_definition import Connectivity
from tests.strategies import graphs, to_networkx


def _sets(*labels):
    return [frozenset(int(c) for c in str(s)) for s in labels]


def test_cut_complex_of_c5(c5):
    cplx = cut_complex(c5, 3)
    assert cplx.facets == _sets(13, 14, 24, 25, 35)
    assert cplx.facet_set == frozenset(
        frozenset(e) for e in complement(c5).edges()
    )


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_complete_graph_has_empty_cut_complex(k):
    assert cut_complex(complete_graph(5), k).num_facets == 0


def test_empty_graph_cut_complex():
    cplx = cut_complex(empty_graph(4), 2)
    assert cplx.facets == _sets(12, 13, 14, 23, 24, 34)


def test_total_cut_complex_examples(c6):
    assert total_cut_complex(c6, 3).facets == _sets(135, 246)
    assert total_cut_complex(complete_graph(4), 2).num_facets == 0
    assert total_cut_complex(empty_graph(4), 3).facets == _sets(1, 2, 3, 4)


def test_total_cut_complex_accepts_k_equal_n():
    assert total_cut_complex(empty_graph(3), 3).facets == [frozenset()]
    assert total_cut_complex(complete_graph(3), 3).num_facets == 0


@pytest.mark.parametrize("k", [0, 5])
def test_cut_complex_rejects_k(c5, k):
    with pytest.raises(ValueError):
        cut_complex(c5, k)


def test_total_cut_complex_rejects_k(c5):
    with pytest.raises(ValueError):
        total_cut_complex(c5, 6)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2, max_n=7), st.data())
def test_cut_complex_matches_networkx(graph, data):
    k = data.draw(st.integers(1, graph.n - 1))
    nx_graph = to_networkx(graph)
    expected = {
        frozenset(s)
        for s in itertools.combinations(graph.vertices, k)
        if not nx.is_connected(nx_graph.subgraph(s))
    }
    cplx = cut_complex(graph, k)
    assert cplx.cofacet_set == expected
    assert cplx.facet_sizes() <= {graph.n - k}


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=3, max_n=7), st.data())
def test_total_facets_are_cut_facets(graph, data):
    k = data.draw(st.integers(2, graph.n - 1))
    total = total_cut_complex(graph, k).facet_set
    assert total <= cut_complex(graph, k).facet_set


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=4, max_n=7))
def test_triples_flip_under_complement(graph):
    assert np.array_equal(
        cut_mask(graph, 3), ~cut_mask(complement(graph), 3)
    )


def _edge_bits(graph):
    pairs = subset_index(graph.n, 2)
    return graph.adjacency[pairs[:, 0], pairs[:, 1]][None, :]


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=3, max_n=7))
def test_triple_edge_counts_under_complement(graph):
    counts = triple_edge_counts(graph.n, _edge_bits(graph))
    flipped = triple_edge_counts(graph.n, _edge_bits(complement(graph)))
    assert np.array_equal(counts + flipped, np.full_like(counts, 3))


def test_independent_mask_counts(c5):
    assert independent_mask(c5, 2).sum() == 5
    assert not independent_mask(c5, 3).any()


def test_triple_edge_counts_match_masks():
    n = 5
    rng = np.random.default_rng(3)
    bits = rng.random((20, 10)) < 0.5
    counts = triple_edge_counts(n, bits)
    assert counts.shape == (20, 10)
    pairs = subset_index(n, 2)
    for row, edge_bits in zip(counts, bits):
        adj = np.zeros((n, n), dtype=bool)
        adj[pairs[edge_bits, 0], pairs[edge_bits, 1]] = True
        adj |= adj.T
        graph = Graph(n, adj)
        assert np.array_equal(row < 2, cut_mask(graph, 3))
        assert np.array_equal(row == 0, independent_mask(graph, 3))


def test_triple_edge_counts_checks_shape():
    with pytest.raises(ValueError):
        triple_edge_counts(5, np.zeros((2, 9), dtype=bool))
    with pytest.raises(ValueError):
        triple_edge_counts(2, np.zeros((2, 1), dtype=bool))


def test_bar_complex_examples(c5):
    cplx = SimplicialComplex(4, [{1, 2}, {3, 4}])
    assert bar_complex(cplx).facets == _sets(12, 34)
    assert bar_complex(SimplicialComplex(5, [{1, 2, 3}])).facets == _sets(45)
    cuts = cut_complex(c5, 3)
    assert bar_complex(cuts).facets == _sets(124, 134, 135, 235, 245)
    assert bar_complex(bar_complex(cuts)) == cuts


def test_bar_complex_rejects_bad_input():
    with pytest.raises(ValueError):
        bar_complex(SimplicialComplex(4, []))
    with pytest.raises(ValueError):
        bar_complex(SimplicialComplex(4, [{1, 2}, {3}]))


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=5, max_n=7))
def test_bar_complement_is_connected_triples(graph):
    cplx = cut_complex(graph, 3)
    assume(cplx.num_facets > 0)
    nx_graph = to_networkx(graph)
    connected = {
        frozenset(s)
        for s in itertools.combinations(graph.vertices, 3)
        if nx.is_connected(nx_graph.subgraph(s))
    }
    assert bar_complement(cplx).facet_set == connected
    bar = bar_complex(cplx).facet_set
    assert not bar & connected
    assert len(bar) + len(connected) == math.comb(graph.n, 3)


def test_pure_dimension(c5):
    assert pure_dimension(cut_complex(c5, 3)) == 1
    assert pure_dimension(cut_complex(c5, 2)) == 2


def test_tri_connectivity_table_from_c5(c5):
    table = tri_connectivity_table(cut_complex(c5, 3))
    assert table.n == 5
    assert table.connected(1, 2, 3)
    assert not table.connected(1, 2, 4)
    assert table.verdict({3, 1, 2}) is Connectivity.CONNECTED
    assert table.verdict([4, 2, 1]) is Connectivity.DISCONNECTED
    with pytest.raises(ValueError):
        table.verdict([1, 1, 2])


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=5, max_n=8))
def test_tri_connectivity_table_agrees_with_graph(graph):
    cplx = cut_complex(graph, 3)
    assume(cplx.num_facets > 0)
    table = tri_connectivity_table(cplx)
    expected = TriConnectivityTable.from_graph(graph).array
    assert np.array_equal(table.array, expected)
    arr = table.array
    assert np.array_equal(arr, arr.transpose(1, 0, 2))
    assert np.array_equal(arr, arr.transpose(0, 2, 1))
    r = np.arange(graph.n)
    assert not arr[r, r, :].any()


def test_tri_connectivity_table_rejects_wrong_dimension(c5):
    with pytest.raises(ValueError, match="dimension"):
        tri_connectivity_table(cut_complex(c5, 2))
    with pytest.raises(ValueError):
        tri_connectivity_table(SimplicialComplex(4, [{1}]))
    with pytest.raises(ValueError):
        tri_connectivity_table(SimplicialComplex(5, []))


def test_table_from_cuts_is_read_only():
    table = TriConnectivityTable.from_cuts(5, [{1, 2, 3}])
    assert not table.connected(3, 1, 2)
    assert table.connected(1, 2, 4)
    with pytest.raises(ValueError):
        table.array[0, 1, 3] = False
    with pytest.raises(ValueError):
        TriConnectivityTable.from_cuts(5, [{1, 2, 6}])
