import math

import pytest

from cutcomplex.complexes.builders import cut_complex, total_cut_complex
from cutcomplex.complexes.model import SimplicialComplex, complete_graph
from cutcomplex.complexes.model import empty_graph, graph_from_edges
from cutcomplex.complexes.model import k_subsets
from cutcomplex.complexes.realization import check_facet_chain_condition
from cutcomplex.complexes.realization import check_facet_neighbor_condition
from cutcomplex.complexes.realization import counterexample_large_d
from cutcomplex.complexes.realization import counterexample_small_d
from cutcomplex.complexes.realization import dual_complex_d4
from cutcomplex.complexes.realization import realization_report
from cutcomplex.complexes.realization import realize_codim2, realize_dim0
from cutcomplex.complexes.realization import restrict_total


def _sets(*labels):
    return [frozenset(int(c) for c in str(s)) for s in labels]


def test_conditions_hold_on_c5(c5):
    cplx = cut_complex(c5, 3)
    assert check_facet_chain_condition(cplx)
    assert check_facet_neighbor_condition(cplx)


def test_conditions_fail_on_small_counterexample():
    cplx = counterexample_small_d(5, 1)
    assert not check_facet_chain_condition(cplx)
    assert not check_facet_neighbor_condition(cplx)


def test_conditions_are_vacuous_for_one_bar_complement_facet():
    # Every 2-set but 45 is a facet: the bar complement is {1 2 3} alone.
    cplx = SimplicialComplex(
        5, [s for s in k_subsets(5, 2) if s != frozenset({4, 5})]
    )
    assert check_facet_chain_condition(cplx)
    assert check_facet_neighbor_condition(cplx)


def test_dual_complex_examples(c5):
    dual = dual_complex_d4(cut_complex(c5, 3))
    assert dual.facets == _sets(12, 15, 23, 34, 45)
    everything = SimplicialComplex(5, list(k_subsets(5, 2)))
    assert dual_complex_d4(everything).num_facets == 0
    empty = SimplicialComplex(5, [])
    assert dual_complex_d4(empty, d=1) == everything


def test_dual_complex_checks_dimension(c5):
    with pytest.raises(ValueError):
        dual_complex_d4(SimplicialComplex(5, []))
    with pytest.raises(ValueError):
        dual_complex_d4(cut_complex(c5, 3), d=2)
    with pytest.raises(ValueError):
        dual_complex_d4(SimplicialComplex(6, [{1, 2}]))


def test_realize_dim0_examples():
    cplx = SimplicialComplex(5, [{1}, {2}, {3}])
    graph = realize_dim0(cplx, 5)
    assert graph.edges() == [(1, 2), (1, 4), (2, 3), (3, 5)]
    assert cut_complex(graph, 4) == cplx
    everything = SimplicialComplex(4, [{1}, {2}, {3}, {4}])
    assert realize_dim0(everything, 4) == empty_graph(4)
    star = realize_dim0(SimplicialComplex(4, [{1}]), 4)
    assert star.edges() == [(1, 2), (1, 3), (1, 4)]


def test_realize_dim0_clique_case():
    cplx = SimplicialComplex(4, [{1}, {2}, {4}])
    graph = realize_dim0(cplx, 4)
    assert graph.edges() == [(1, 2), (1, 4), (2, 4)]
    assert cut_complex(graph, 3) == cplx


def test_realize_dim0_rejects_bad_input():
    with pytest.raises(ValueError):
        realize_dim0(SimplicialComplex(2, [{1}]), 2)
    with pytest.raises(ValueError):
        realize_dim0(SimplicialComplex(4, [{1, 2}]), 4)
    with pytest.raises(ValueError):
        realize_dim0(SimplicialComplex(4, []), 4)


def test_realize_codim2_examples():
    cplx = SimplicialComplex(3, [{1, 2}, {1, 3}])
    graph = realize_codim2(cplx)
    assert graph.edges() == [(1, 2), (1, 3), (1, 4), (2, 3)]
    assert cut_complex(graph, 2) == cplx.with_ambient(4)
    full = SimplicialComplex(3, [{1, 2}, {1, 3}, {2, 3}])
    assert realize_codim2(full).edges() == [(1, 2), (1, 3), (2, 3)]
    assert realize_codim2(SimplicialComplex(3, [])) == complete_graph(4)


def test_realize_codim2_rejects_wrong_size():
    with pytest.raises(ValueError):
        realize_codim2(SimplicialComplex(4, [{1, 2}]))


def test_counterexample_small_d():
    cplx = counterexample_small_d(5, 1)
    assert cplx.facets == _sets(13, 14, 15, 23, 24, 25, 34, 35)
    assert counterexample_small_d(7, 2).num_facets == math.comb(7, 3) - 2
    with pytest.raises(ValueError):
        counterexample_small_d(5, 2)


def test_counterexample_large_d_policies():
    with pytest.raises(ValueError, match="members"):
        counterexample_large_d(6, 2)
    literal = counterexample_large_d(6, 2, policy="literal")
    assert literal.num_facets == math.comb(6, 3) - 1
    assert frozenset({4, 5, 6}) not in literal.facet_set
    padded = counterexample_large_d(6, 2, policy="pad")
    assert padded.num_facets == math.comb(6, 3) - 2
    assert frozenset({1, 2, 3}) not in padded.facet_set
    with pytest.raises(ValueError, match="members"):
        counterexample_large_d(7, 3)
    padded = counterexample_large_d(7, 3, policy="pad")
    assert frozenset({1, 2, 3, 7}) not in padded.facet_set
    assert frozenset({4, 5, 6, 7}) not in padded.facet_set


@pytest.mark.parametrize("n, d", [(6, 1), (5, 1), (8, 5)])
def test_counterexample_large_d_range(n, d):
    with pytest.raises(ValueError, match="needs"):
        counterexample_large_d(n, d, policy="pad")


def test_counterexample_large_d_rejects_policy():
    with pytest.raises(ValueError, match="policy"):
        counterexample_large_d(6, 2, policy="guess")


def test_restrict_total_drops_isolated_vertex(c6):
    graph = graph_from_edges(7, c6.edges())
    restricted = restrict_total(graph, 6, 2)
    assert restricted == c6
    assert total_cut_complex(restricted, 3).facets == _sets(135, 246)
    assert restrict_total(c6, 6, 2) is c6


def test_restrict_total_rejects_common_vertex():
    # Independent triples 235 and 245 give facets 14 and 13.
    graph = graph_from_edges(
        5, [(1, 2), (1, 3), (1, 4), (1, 5), (3, 4)]
    )
    assert total_cut_complex(graph, 3).facets == _sets(13, 14)
    with pytest.raises(ValueError, match="share"):
        restrict_total(graph, 4, 1)


def test_restrict_total_rejects_support_beyond_n():
    with pytest.raises(ValueError, match="beyond"):
        restrict_total(empty_graph(4), 3, 0)


def test_realization_report(c5):
    cplx = cut_complex(c5, 3)
    report = realization_report(cplx, realizations=[c5], exhausted_up_to=5)
    assert report.d == 1
    assert report.chain_condition and report.neighbor_condition
    payload = report.to_dict()
    assert payload["realizations_found"] == [
        {"vertex_count": 5, "edges": c5.edges()}
    ]
    assert payload["exhausted_up_to"] == 5
    with pytest.raises(ValueError, match="realize"):
        realization_report(cplx, realizations=[complete_graph(5)])
