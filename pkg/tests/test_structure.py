import pytest
from hypothesis import given, settings

from cutcomplex.complexes.builders import cut_complex, total_cut_complex
from cutcomplex.complexes.model import complete_graph, empty_graph
from cutcomplex.complexes.model import graph_from_edges
from cutcomplex.complexes.shared_definition import ObstructionKind
from cutcomplex.complexes.structure import P4Witness, find_dominating_pairs
from cutcomplex.complexes.structure import find_p4_witnesses, find_twins
from cutcomplex.complexes.structure import flip_twin_edge, has_twins
from cutcomplex.complexes.structure import is_in_p4_family
from cutcomplex.complexes.structure import is_promise_class, is_unique_3cut
from cutcomplex.complexes.structure import is_unique_total_3cut, p4_swap
from tests.strategies import graphs

P4 = graph_from_edges(4, [(1, 2), (2, 3), (3, 4)])


def test_find_twins_examples(c5):
    assert find_twins(complete_graph(4)) == [
        (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)
    ]
    star = graph_from_edges(4, [(1, 2), (1, 3), (1, 4)])
    assert find_twins(star) == [(2, 3), (2, 4), (3, 4)]
    assert find_twins(c5) == []


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_has_twins_agrees_with_find_twins(graph):
    assert has_twins(graph) == bool(find_twins(graph))


def test_p4_witness_on_a_path():
    witness = is_in_p4_family(P4)
    assert witness == P4Witness(1, 2, 3, 4, frozenset())
    assert len(list(find_p4_witnesses(P4))) == 2


def test_p4_witness_with_universal_vertex(p4_fan):
    witness = is_in_p4_family(p4_fan)
    assert witness == P4Witness(1, 2, 3, 4, frozenset({5}))
    assert witness.to_dict()["vprime"] == [5]


def test_no_p4_witness_in_c5(c5):
    assert is_in_p4_family(c5) is None


def test_find_dominating_pairs_examples():
    assert find_dominating_pairs(complete_graph(3)) == [(1, 2), (1, 3), (2, 3)]
    assert find_dominating_pairs(empty_graph(3)) == []
    c4 = graph_from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    # Adjacent pairs cover every vertex, opposite pairs the other two.
    assert len(find_dominating_pairs(c4)) == 6


def test_flip_twin_edge_keeps_complex(star5):
    flipped = flip_twin_edge(star5, 2, 3)
    assert flipped.has_edge(2, 3)
    assert cut_complex(flipped, 3) == cut_complex(star5, 3)


def test_flip_twin_edge_rejects_non_twins(c5):
    with pytest.raises(ValueError, match="twins"):
        flip_twin_edge(c5, 1, 2)


def test_p4_swap_examples(p4_fan):
    swapped = p4_swap(P4, is_in_p4_family(P4))
    assert swapped.edges() == [(1, 3), (2, 3), (2, 4)]
    assert cut_complex(swapped, 3) == cut_complex(P4, 3)
    fan = p4_swap(p4_fan, is_in_p4_family(p4_fan))
    assert fan.edges() == [
        (1, 3), (1, 5), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)
    ]
    assert cut_complex(fan, 3) == cut_complex(p4_fan, 3)


def test_p4_swap_rejects_invalid_witness(c5):
    with pytest.raises(ValueError):
        p4_swap(c5, P4Witness(1, 2, 3, 4, frozenset()))


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=4, max_n=7))
def test_moves_preserve_the_3cut_complex(graph):
    base = cut_complex(graph, 3)
    for u, v in find_twins(graph):
        assert cut_complex(flip_twin_edge(graph, u, v), 3) == base
    for witness in find_p4_witnesses(graph):
        assert cut_complex(p4_swap(graph, witness), 3) == base


def test_is_unique_3cut_examples(c5, star5, p4_isolated):
    assert is_unique_3cut(c5).unique
    verdict = is_unique_3cut(star5)
    assert not verdict.unique
    assert {o.kind for o in verdict.obstructions} == {ObstructionKind.TWINS}
    verdict = is_unique_3cut(p4_isolated)
    assert not verdict.unique
    assert [o.kind for o in verdict.obstructions] == [
        ObstructionKind.P4_MEMBERSHIP
    ]
    assert verdict.to_dict()["obstructions"][0]["witness"]["x"] == 1


def test_is_unique_3cut_needs_five_vertices():
    with pytest.raises(ValueError):
        is_unique_3cut(P4)


def test_is_unique_total_3cut_examples(c5, c6):
    assert is_unique_total_3cut(empty_graph(3)).unique
    assert not is_unique_total_3cut(complete_graph(3)).unique
    # Antipodal pairs of C6 and distance-2 pairs of C5 dominate.
    assert not is_unique_total_3cut(c6).unique
    assert (1, 4) in find_dominating_pairs(c6)
    assert not is_unique_total_3cut(c5).unique
    flipped = c6.toggle_edge(1, 4)
    assert total_cut_complex(flipped, 3) == total_cut_complex(c6, 3)


def test_is_promise_class(c5, c6, p5, star5, p4_isolated):
    assert is_promise_class(c5)
    assert is_promise_class(c6)
    assert is_promise_class(p5)
    assert not is_promise_class(star5)
    assert not is_promise_class(p4_isolated)
    assert not is_promise_class(P4)
