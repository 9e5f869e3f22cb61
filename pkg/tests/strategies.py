"""Hypothesis strategies for labeled graphs."""
import networkx as nx
from hypothesis import strategies as st

from cutcomplex.complexes.model import graph_from_edges, subset_index


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    slots = [(int(a) + 1, int(b) + 1) for a, b in subset_index(n, 2)]
    bits = draw(
        st.lists(st.booleans(), min_size=len(slots), max_size=len(slots))
    )
    return graph_from_edges(n, [s for s, bit in zip(slots, bits) if bit])


def to_networkx(graph):
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(graph.vertices)
    nx_graph.add_edges_from(graph.edges())
    return nx_graph
