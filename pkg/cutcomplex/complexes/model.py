"""Labeled graphs, vertex sets and simplicial complexes.

Vertices carry 1-based labels at every public boundary. Adjacency matrices
are indexed from 0.
"""
import functools
import itertools
import logging
import math

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

logger = logging.getLogger(__name__)


def ground_set(n):
    return frozenset(range(1, n + 1))


def vertex_set(members, n):
    """Build a vertex set and check it against the ambient range.
    Args:
      members: iterable of int labels.
      n: int, ambient vertex count.
    Returns:
      frozenset of labels.
    Raises:
      ValueError: if a label lies outside 1..n.
    """
    result = frozenset(int(m) for m in members)
    bad = sorted(m for m in result if not 1 <= m <= n)
    if bad:
        raise ValueError(f"labels {bad} out of range 1..{n}.")
    return result


def k_subsets(n, k):
    """Yield the k-subsets of 1..n in lexicographic order."""
    for combo in itertools.combinations(range(1, n + 1), k):
        yield frozenset(combo)


@functools.lru_cache(maxsize=64)
def subset_index(n, k):
    """All k-subsets of range(n) as a read-only int array [C(n, k), k]."""
    if k == 0:
        idx = np.zeros((1, 0), dtype=np.intp)
    else:
        idx = np.fromiter(
            itertools.chain.from_iterable(itertools.combinations(range(n), k)),
            dtype=np.intp,
            count=math.comb(n, k) * k,
        ).reshape(-1, k)
    idx.setflags(write=False)
    return idx


class Graph(object):
    """Labeled simple graph on the vertices 1..n."""

    def __init__(self, n, adjacency):
        """
        Args:
          n: int, number of vertices (at least 1).
          adjacency: [n, n] array-like, symmetric with an empty diagonal.
        """
        if n < 1:
            raise ValueError(f"n ({n}) must be at least 1.")
        adj = np.array(adjacency, dtype=bool)
        if adj.shape != (n, n):
            raise ValueError(
                f"adjacency shape {adj.shape} does not match n ({n})."
            )
        if adj.diagonal().any():
            loops = (np.flatnonzero(adj.diagonal()) + 1).tolist()
            raise ValueError(f"adjacency has self-loops at {loops}.")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency is not symmetric.")
        self._init(n, adj)

    @classmethod
    def _from_trusted(cls, n, adj):
        graph = cls.__new__(cls)
        graph._init(n, adj)
        return graph

    def _init(self, n, adj):
        adj.setflags(write=False)
        self._n = n
        self._adj = adj
        self._neighborhoods = None
        self._hash = None

    @property
    def n(self):
        return self._n

    @property
    def adjacency(self):
        """Read-only [n, n] bool matrix, 0-based."""
        return self._adj

    @property
    def vertices(self):
        return range(1, self._n + 1)

    @property
    def neighborhoods(self):
        """Tuple indexed by label; entry 0 is an empty placeholder."""
        if self._neighborhoods is None:
            rows = [frozenset()]
            for i in range(self._n):
                rows.append(
                    frozenset((np.flatnonzero(self._adj[i]) + 1).tolist())
                )
            self._neighborhoods = tuple(rows)
        return self._neighborhoods

    def _check_label(self, v):
        if not 1 <= v <= self._n:
            raise ValueError(f"vertex {v} out of range 1..{self._n}.")

    def neighborhood(self, v):
        self._check_label(v)
        return self.neighborhoods[v]

    def degree(self, v):
        return len(self.neighborhood(v))

    def has_edge(self, u, v):
        self._check_label(u)
        self._check_label(v)
        return bool(self._adj[u - 1, v - 1])

    def edges(self):
        """Sorted list of (u, v) with u < v."""
        rows, cols = np.nonzero(np.triu(self._adj, 1))
        return [(int(i) + 1, int(j) + 1) for i, j in zip(rows, cols)]

    @property
    def num_edges(self):
        return int(self._adj.sum()) // 2

    def edge_mask(self):
        """Integer with bit i set iff the i-th pair in lex order is an edge."""
        slots = subset_index(self._n, 2)
        bits = self._adj[slots[:, 0], slots[:, 1]]
        return sum(1 << int(i) for i in np.flatnonzero(bits))

    def toggle_edge(self, u, v):
        self._check_label(u)
        self._check_label(v)
        if u == v:
            raise ValueError(f"cannot toggle a self-loop at {u}.")
        adj = self._adj.copy()
        adj[u - 1, v - 1] = adj[v - 1, u - 1] = not adj[u - 1, v - 1]
        return Graph._from_trusted(self._n, adj)

    def with_edges(self, add=(), remove=()):
        adj = self._adj.copy()
        for edits, value in ((remove, False), (add, True)):
            for u, v in edits:
                self._check_label(u)
                self._check_label(v)
                if u == v:
                    raise ValueError(f"self-loop at vertex {u}.")
                adj[u - 1, v - 1] = adj[v - 1, u - 1] = value
        return Graph._from_trusted(self._n, adj)

    def restrict(self, m):
        """Induced subgraph on 1..m."""
        if not 1 <= m <= self._n:
            raise ValueError(f"m ({m}) must lie in 1..{self._n}.")
        return Graph._from_trusted(m, self._adj[:m, :m].copy())

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._adj, other._adj)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, np.packbits(self._adj).tobytes()))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self._n}, edges={self.edges()})"


def graph_from_edges(n, edges):
    """Build a graph from an edge list; duplicate edges collapse.
    Args:
      n: int, number of vertices.
      edges: iterable of (u, v) label pairs.
    Returns:
      Graph.
    Raises:
      ValueError: on an out-of-range label or a self-loop.
    """
    if n < 1:
        raise ValueError(f"n ({n}) must be at least 1.")
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        u, v = int(u), int(v)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u}, {v}) has a label outside 1..{n}.")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}.")
        adj[u - 1, v - 1] = adj[v - 1, u - 1] = True
    return Graph._from_trusted(n, adj)


def empty_graph(n):
    return graph_from_edges(n, [])


def complete_graph(n):
    return complement(empty_graph(n))


def complement(graph):
    adj = ~graph.adjacency
    np.fill_diagonal(adj, False)
    return Graph._from_trusted(graph.n, adj)


def is_connected(graph, members):
    """Whether the induced subgraph on a vertex set is connected.
    Args:
      graph: Graph.
      members: nonempty iterable of labels.
    Returns:
      bool; a single vertex counts as connected.
    Raises:
      ValueError: on an empty or out-of-range vertex set.
    """
    members = vertex_set(members, graph.n)
    if not members:
        raise ValueError("is_connected needs a nonempty vertex set.")
    idx = np.array(sorted(members), dtype=np.intp) - 1
    sub = graph.adjacency[np.ix_(idx, idx)]
    if len(idx) <= 3:
        return int(sub.sum()) // 2 >= len(idx) - 1
    n_components = connected_components(
        csr_matrix(sub), directed=False, return_labels=False
    )
    return n_components == 1


def _sort_key(face):
    return tuple(sorted(face))


class SimplicialComplex(object):
    """Simplicial complex on 1..n, given by its facets.

    With ``complemented=True`` the stored sets are the complements of the
    facets (cofacet form). Cut complexes are kept this way, since on n
    vertices their facets have n - k members while their cofacets have k.
    The constructor trusts its input; use ``complex_from_facets`` or
    ``complex_from_cofacets`` to validate.
    """

    def __init__(self, n, faces, complemented=False):
        if n < 1:
            raise ValueError(f"n ({n}) must be at least 1.")
        self._n = n
        self._faces = frozenset(frozenset(f) for f in faces)
        self._complemented = bool(complemented)
        self._fingerprint = None

    @property
    def n(self):
        return self._n

    @property
    def complemented(self):
        return self._complemented

    @property
    def num_facets(self):
        return len(self._faces)

    def facet_sizes(self):
        if self._complemented:
            return {self._n - len(f) for f in self._faces}
        return {len(f) for f in self._faces}

    @property
    def is_pure(self):
        return len(self.facet_sizes()) == 1

    @property
    def dimension(self):
        """Largest facet size minus one; None without facets."""
        sizes = self.facet_sizes()
        return max(sizes) - 1 if sizes else None

    @property
    def facet_size(self):
        sizes = self.facet_sizes()
        if len(sizes) != 1:
            raise ValueError(
                f"complex is not pure (facet sizes {sorted(sizes)})."
            )
        return sizes.pop()

    @property
    def facet_set(self):
        if self._complemented:
            ground = ground_set(self._n)
            return frozenset(ground - f for f in self._faces)
        return self._faces

    @property
    def cofacet_set(self):
        if self._complemented:
            return self._faces
        ground = ground_set(self._n)
        return frozenset(ground - f for f in self._faces)

    @property
    def facets(self):
        return sorted(self.facet_set, key=_sort_key)

    @property
    def cofacets(self):
        return sorted(self.cofacet_set, key=_sort_key)

    def support(self):
        """Union of the facets."""
        if not self._faces:
            return frozenset()
        if self._complemented:
            return ground_set(self._n) - frozenset.intersection(*self._faces)
        return frozenset.union(*self._faces)

    def facet_intersection(self):
        if not self._faces:
            raise ValueError("complex has no facets.")
        if self._complemented:
            return ground_set(self._n) - frozenset.union(*self._faces)
        return frozenset.intersection(*self._faces)

    def with_ambient(self, m):
        """The same facets viewed on 1..m.
        Raises:
          ValueError: if m is smaller than the largest label in use.
        """
        if m < 1:
            raise ValueError(f"m ({m}) must be at least 1.")
        support = self.support()
        if support and max(support) > m:
            raise ValueError(
                f"support reaches vertex {max(support)}, beyond m ({m})."
            )
        if not self._complemented:
            return SimplicialComplex(m, self._faces)
        if m >= self._n:
            extra = frozenset(range(self._n + 1, m + 1))
            faces = [f | extra for f in self._faces]
        else:
            dropped = frozenset(range(m + 1, self._n + 1))
            faces = [f - dropped for f in self._faces]
        return SimplicialComplex(m, faces, complemented=True)

    def fingerprint(self):
        """Canonical bytes: n, then each sorted cofacet with its length."""
        if self._fingerprint is None:
            words = [self._n]
            for face in self.cofacets:
                words.append(len(face))
                words.extend(sorted(face))
            self._fingerprint = np.asarray(words, dtype=np.uint32).tobytes()
        return self._fingerprint

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return complexes_equal(self, other)

    def __hash__(self):
        return hash(self.fingerprint())

    def __repr__(self):
        facets = [_sort_key(f) for f in self.facets[:8]]
        more = ", ..." if self.num_facets > 8 else ""
        return f"SimplicialComplex(n={self._n}, facets={facets}{more})"


def complexes_equal(first, second):
    """Equal ambient vertex count and equal facet sets."""
    if first.n != second.n:
        return False
    if first.complemented == second.complemented:
        return first._faces == second._faces
    return first.cofacet_set == second.cofacet_set


def _reduce_to_antichain(faces, strict, keep_maximal, what):
    seen = set()
    for face in faces:
        if face in seen and strict:
            raise ValueError(f"duplicate {what} {sorted(face)}.")
        seen.add(face)
    if len({len(f) for f in seen}) <= 1:
        return seen
    kept = []
    for face in sorted(seen, key=len, reverse=keep_maximal):
        if keep_maximal:
            cover = next((t for t in kept if face < t), None)
        else:
            cover = next((t for t in kept if t < face), None)
        if cover is None:
            kept.append(face)
        elif strict:
            raise ValueError(
                f"{what} {sorted(face)} is comparable with {sorted(cover)}; "
                "faces must form an antichain."
            )
    return kept


def complex_from_facets(n, faces, strict=False):
    """Build a complex from a list of faces.
    Args:
      n: int, ambient vertex count.
      faces: iterable of iterables of labels.
      strict: bool, reject duplicates and non-maximal faces instead of
        dropping them.
    Returns:
      SimplicialComplex.
    """
    checked = [vertex_set(f, n) for f in faces]
    kept = _reduce_to_antichain(checked, strict, True, "facet")
    return SimplicialComplex(n, kept)


def complex_from_cofacets(n, cofaces, strict=False):
    """Build a complex from facet complements.

    Each listed set T contributes the facet {1..n} minus T, so maximal
    facets correspond to minimal listed sets.
    """
    checked = [vertex_set(f, n) for f in cofaces]
    kept = _reduce_to_antichain(checked, strict, False, "cofacet")
    return SimplicialComplex(n, kept, complemented=True)
