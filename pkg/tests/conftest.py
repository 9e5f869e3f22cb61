import pytest

from cutcomplex.complexes.model import graph_from_edges


def cycle(n):
    return graph_from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def c6():
    return cycle(6)


@pytest.fixture
def p5():
    return graph_from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5)])


@pytest.fixture
def star5():
    """K_{1,4} centred at 1."""
    return graph_from_edges(5, [(1, 2), (1, 3), (1, 4), (1, 5)])


@pytest.fixture
def p4_isolated():
    return graph_from_edges(5, [(1, 2), (2, 3), (3, 4)])


@pytest.fixture
def p4_fan():
    """Path 1-2-3-4 with 5 joined to every path vertex."""
    return graph_from_edges(
        5, [(1, 2), (2, 3), (3, 4), (1, 5), (2, 5), (3, 5), (4, 5)]
    )
