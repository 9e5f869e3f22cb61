"""Cut complexes, total cut complexes and the bar complexes derived from them.
"""
import itertools
import logging
import math

import numpy as np

from .model import SimplicialComplex, k_subsets, subset_index
from .shared_definition import Connectivity

logger = logging.getLogger(__name__)


def _check_k(graph, k, upper):
    if not 1 <= k <= upper:
        raise ValueError(
            f"k ({k}) must lie in 1..{upper} for a graph on {graph.n} "
            "vertices."
        )


def _induced_edge_counts(adj, idx):
    counts = np.zeros(len(idx), dtype=np.int64)
    for a, b in itertools.combinations(range(idx.shape[1]), 2):
        counts += adj[idx[:, a], idx[:, b]]
    return counts


def _disconnected_mask(graph, idx, chunk_size=4096):
    k = idx.shape[1]
    adj = graph.adjacency
    if k <= 3:
        # On at most three vertices connected means at least k - 1 edges.
        return _induced_edge_counts(adj, idx) < k - 1
    out = np.empty(len(idx), dtype=bool)
    eye = np.eye(k, dtype=bool)
    for start in range(0, len(idx), chunk_size):
        rows = idx[start : start + chunk_size]
        reach = adj[rows[:, :, None], rows[:, None, :]] | eye
        # Squaring doubles the path length covered.
        for _ in range(max(1, math.ceil(math.log2(k)))):
            steps = reach.astype(np.int32)
            reach = (steps @ steps) > 0
        out[start : start + len(rows)] = ~reach[:, 0, :].all(axis=1)
    return out


def _rows_to_sets(rows):
    return [frozenset((row + 1).tolist()) for row in rows]


def cut_mask(graph, k):
    """Disconnected k-sets as a bool mask over the rows of subset_index."""
    _check_k(graph, k, graph.n - 1)
    return _disconnected_mask(graph, subset_index(graph.n, k))


def independent_mask(graph, k):
    """Independent k-sets as a bool mask over the rows of subset_index."""
    _check_k(graph, k, graph.n)
    idx = subset_index(graph.n, k)
    return _induced_edge_counts(graph.adjacency, idx) == 0


def triple_edge_counts(n, edge_bits):
    """Edges inside every 3-set, for many graphs on 1..n at once.

    A triple is disconnected iff it spans at most one edge and independent
    iff it spans none, so rows of the result determine both 3-cut
    complexes.

    Args:
      n: int, number of vertices (at least 3).
      edge_bits: [N, C(n, 2)] bool, edge slots in lexicographic order.
    Returns:
      [N, C(n, 3)] int8, columns in the row order of subset_index(n, 3).
    """
    if n < 3:
        raise ValueError(f"n ({n}) must be at least 3.")
    bits = np.asarray(edge_bits, dtype=np.int8)
    if bits.ndim != 2 or bits.shape[1] != math.comb(n, 2):
        raise ValueError(
            f"edge_bits shape {bits.shape} does not match n ({n})."
        )
    slot = np.full((n, n), -1, dtype=np.intp)
    pairs = subset_index(n, 2)
    slot[pairs[:, 0], pairs[:, 1]] = np.arange(len(pairs))
    tri = subset_index(n, 3)
    return (
        bits[:, slot[tri[:, 0], tri[:, 1]]]
        + bits[:, slot[tri[:, 0], tri[:, 2]]]
        + bits[:, slot[tri[:, 1], tri[:, 2]]]
    )


def cut_complex(graph, k):
    """k-cut complex of a graph.

    Facets are the (n - k)-sets S such that the graph induced on the
    remaining k vertices is disconnected. The result is stored in cofacet
    form, i.e. by those disconnected k-sets.

    Args:
      graph: Graph.
      k: int, 1 <= k <= n - 1.
    Returns:
      SimplicialComplex, possibly without facets.
    """
    mask = cut_mask(graph, k)
    cuts = _rows_to_sets(subset_index(graph.n, k)[mask])
    logger.debug("cut complex k=%d on n=%d: %d facets", k, graph.n, len(cuts))
    return SimplicialComplex(graph.n, cuts, complemented=True)


def total_cut_complex(graph, k):
    """Total k-cut complex: facets are complements of independent k-sets.

    k = n is accepted; its only possible facet is the empty set.
    """
    mask = independent_mask(graph, k)
    rows = subset_index(graph.n, k)[mask]
    return SimplicialComplex(graph.n, _rows_to_sets(rows), complemented=True)


def pure_dimension(cplx):
    """Dimension of a pure complex with at least one facet."""
    if cplx.num_facets == 0:
        raise ValueError("complex has no facets; its dimension is undefined.")
    if not cplx.is_pure:
        raise ValueError(
            f"complex is not pure (facet sizes {sorted(cplx.facet_sizes())})."
        )
    return cplx.facet_size - 1


def bar_complex(cplx):
    """Complex whose facets are the complements of the facets of cplx."""
    pure_dimension(cplx)
    return SimplicialComplex(cplx.n, cplx.cofacet_set)


def bar_complement(cplx):
    """(n - d - 1)-sets that are not facets of the bar complex.

    For a cut complex these are exactly the connected induced vertex sets
    of the complementary size.
    """
    d = pure_dimension(cplx)
    if d > cplx.n - 2:
        raise ValueError(
            f"dimension ({d}) must be at most n - 2 ({cplx.n - 2})."
        )
    bar_facets = cplx.cofacet_set
    size = cplx.n - d - 1
    return SimplicialComplex(
        cplx.n, [s for s in k_subsets(cplx.n, size) if s not in bar_facets]
    )


def _check_triple(members, n):
    if len(members) != 3 or len(set(members)) != 3:
        raise ValueError(f"{members} is not a 3-subset of 1..{n}.")
    if not 1 <= members[0] <= members[-1] <= n:
        raise ValueError(f"{members} is not a 3-subset of 1..{n}.")


def _clear_repeats(arr):
    r = np.arange(arr.shape[0])
    arr[r, r, :] = False
    arr[r, :, r] = False
    arr[:, r, r] = False


class TriConnectivityTable(object):
    """Connectivity verdict for every 3-subset of 1..n.

    Backed by an [n, n, n] bool tensor, symmetric under permutation of the
    indices and False wherever an index repeats.
    """

    def __init__(self, n, connected):
        arr = np.array(connected, dtype=bool)
        if arr.shape != (n, n, n):
            raise ValueError(
                f"table shape {arr.shape} does not match n ({n})."
            )
        _clear_repeats(arr)
        arr.setflags(write=False)
        self._n = n
        self._arr = arr

    @classmethod
    def from_cuts(cls, n, triples):
        """Table in which exactly the listed 3-sets are disconnected."""
        rows = []
        for triple in triples:
            members = sorted(triple)
            _check_triple(members, n)
            rows.append(members)
        arr = np.ones((n, n, n), dtype=bool)
        cut = np.array(rows, dtype=np.intp).reshape(-1, 3) - 1
        for perm in itertools.permutations(range(3)):
            arr[cut[:, perm[0]], cut[:, perm[1]], cut[:, perm[2]]] = False
        return cls(n, arr)

    @classmethod
    def from_graph(cls, graph):
        adj = graph.adjacency.astype(np.int8)
        counts = adj[:, :, None] + adj[:, None, :] + adj[None, :, :]
        return cls(graph.n, counts >= 2)

    @property
    def n(self):
        return self._n

    @property
    def array(self):
        return self._arr

    def connected(self, a, b, c):
        """Verdict for three distinct labels as a bool."""
        return bool(self._arr[a - 1, b - 1, c - 1])

    def verdict(self, triple):
        members = sorted(triple)
        _check_triple(members, self._n)
        if self.connected(*members):
            return Connectivity.CONNECTED
        return Connectivity.DISCONNECTED


def tri_connectivity_table(cplx):
    """Triple connectivity read off a complex of facet size n - 3.
    Args:
      cplx: SimplicialComplex, pure of dimension n - 4 on n >= 5 vertices.
    Returns:
      TriConnectivityTable; a triple is disconnected iff its complement is
      a facet.
    """
    if cplx.n < 5:
        raise ValueError(f"n ({cplx.n}) must be at least 5.")
    d = pure_dimension(cplx)
    if d != cplx.n - 4:
        raise ValueError(
            f"dimension ({d}) must be n - 4 ({cplx.n - 4}) for a 3-cut "
            "complex."
        )
    return TriConnectivityTable.from_cuts(cplx.n, cplx.cofacet_set)
