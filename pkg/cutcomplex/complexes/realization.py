"""Which complexes are cut complexes: necessary conditions, the duality on
d + 4 vertices, explicit realizing graphs and the counterexample families.
"""
import dataclasses
import logging

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .builders import bar_complement, cut_complex, pure_dimension
from .builders import total_cut_complex
from .model import SimplicialComplex, empty_graph, graph_from_edges
from .model import Graph, ground_set, k_subsets
from .shared_definition import LARGE_D_POLICIES

logger = logging.getLogger(__name__)


def _bar_complement_intersections(cplx):
    """Facets of the bar complement with their pairwise intersection sizes.
    Returns:
      facets: list of frozensets, all of size s.
      size: int, s = n - d - 1.
      inter: [m, m] int array of |A & B|.
    """
    d = pure_dimension(cplx)
    facets = bar_complement(cplx).facets
    incidence = np.zeros((len(facets), cplx.n), dtype=np.int32)
    for i, facet in enumerate(facets):
        incidence[i, np.array(sorted(facet), dtype=np.intp) - 1] = 1
    return facets, cplx.n - d - 1, incidence @ incidence.T


def check_facet_chain_condition(cplx):
    """Connected (n - d - 1)-sets meeting in one vertex must be linked by a
    chain of such sets, consecutive ones sharing all but one vertex.

    Args:
      cplx: SimplicialComplex, pure of dimension d.
    Returns:
      bool.
    """
    facets, size, inter = _bar_complement_intersections(cplx)
    m = len(facets)
    if m <= 1:
        return True
    off_diagonal = ~np.eye(m, dtype=bool)
    linked = (inter == size - 1) & off_diagonal
    _, labels = connected_components(csr_matrix(linked), directed=False)
    rows, cols = np.nonzero((inter == 1) & off_diagonal)
    broken = labels[rows] != labels[cols]
    if broken.any():
        i = int(np.flatnonzero(broken)[0])
        logger.debug(
            "chain condition fails between %s and %s",
            sorted(facets[rows[i]]),
            sorted(facets[cols[i]]),
        )
    return not broken.any()


def check_facet_neighbor_condition(cplx):
    """Every bar-complement facet A meeting some other facet must have a
    facet C != A with |A & C| = n - d - 2."""
    facets, size, inter = _bar_complement_intersections(cplx)
    m = len(facets)
    if m <= 1:
        return True
    off_diagonal = ~np.eye(m, dtype=bool)
    meets = ((inter > 0) & off_diagonal).any(axis=1)
    has_neighbor = ((inter == size - 1) & off_diagonal).any(axis=1)
    return bool(np.all(~meets | has_neighbor))


def dual_complex_d4(cplx, d=None):
    """On d + 4 vertices: the (d + 1)-sets that are not facets of cplx.

    Args:
      cplx: SimplicialComplex, pure of dimension d.
      d: int, required only when cplx has no facets.
    Returns:
      SimplicialComplex.
    """
    if cplx.num_facets:
        dim = pure_dimension(cplx)
        if d is not None and d != dim:
            raise ValueError(f"d ({d}) does not match the dimension ({dim}).")
        d = dim
    elif d is None:
        raise ValueError("complex has no facets; pass d explicitly.")
    if cplx.n != d + 4:
        raise ValueError(
            f"vertex count ({cplx.n}) must be d + 4 ({d + 4})."
        )
    facets = cplx.facet_set
    return SimplicialComplex(
        cplx.n, [s for s in k_subsets(cplx.n, d + 1) if s not in facets]
    )


def realize_dim0(cplx, n):
    """Graph on n vertices whose (n - 1)-cut complex is the given
    0-dimensional complex.

    With facets {x1}, ..., {xm} and the remaining vertices y1, y2, ...:
    for m <= n - 2 the graph is the path y1 x1 x2 ... xm with y2, y3, ...
    hanging off xm (a star when m = 1); for m = n - 1 a clique on the x's
    plus an isolated y; for m = n the empty graph.

    Args:
      cplx: SimplicialComplex with singleton facets inside 1..n.
      n: int, at least 3.
    Returns:
      Graph.
    """
    if n < 3:
        raise ValueError(f"n ({n}) must be at least 3.")
    if cplx.num_facets == 0 or cplx.facet_sizes() != {1}:
        raise ValueError("complex must be 0-dimensional with some facet.")
    xs = sorted(v for facet in cplx.facet_set for v in facet)
    if xs[-1] > n:
        raise ValueError(f"facet {{{xs[-1]}}} lies outside 1..{n}.")
    ys = sorted(ground_set(n) - set(xs))
    m = len(xs)
    if m == n:
        return empty_graph(n)
    if m == n - 1:
        edges = [(a, b) for i, a in enumerate(xs) for b in xs[i + 1:]]
    else:
        edges = [(ys[0], xs[0])]
        edges += list(zip(xs, xs[1:]))
        edges += [(xs[-1], y) for y in ys[1:]]
    return graph_from_edges(n, edges)


def realize_codim2(cplx):
    """Graph on n + 1 vertices whose 2-cut complex is cplx.

    The graph is complete on 1..n; the extra vertex n + 1 misses exactly
    those a with {1..n} - {a} a facet.
    """
    n = cplx.n
    if cplx.num_facets and cplx.facet_sizes() != {n - 1}:
        raise ValueError(
            f"facets must have size n - 1 ({n - 1}); got "
            f"{sorted(cplx.facet_sizes())}."
        )
    adj = np.ones((n + 1, n + 1), dtype=bool)
    np.fill_diagonal(adj, False)
    for facet in cplx.cofacet_set:
        (a,) = facet
        adj[a - 1, n] = adj[n, a - 1] = False
    return Graph(n + 1, adj)


def counterexample_small_d(n, d):
    """All (d + 1)-subsets of 1..n except {1..d+1} and {n-d..n}.

    Needs n >= 5 and 1 <= d <= (n - 3) / 2.
    """
    if n < 5 or d < 1 or 2 * d > n - 3:
        raise ValueError(
            f"(n, d) = ({n}, {d}) needs n >= 5 and 1 <= d <= (n - 3) / 2."
        )
    excluded = {frozenset(range(1, d + 2)), frozenset(range(n - d, n + 1))}
    return SimplicialComplex(
        n, [s for s in k_subsets(n, d + 1) if s not in excluded]
    )


def counterexample_large_d(n, d, policy="strict"):
    """All (d + 1)-subsets except {n-d..n} and {1..n-d-2} + {2n-2d-1..n}.

    The second set, evaluated as written, has d members rather than d + 1.
    ``policy`` picks what to do then: "strict" raises, "literal" drops that
    exclusion, "pad" uses {1..n-d-1} + {2n-2d-1..n} instead.

    Needs n >= 6 and (n - 2) / 2 <= d <= n - 4.
    """
    if policy not in LARGE_D_POLICIES:
        raise ValueError(
            f"policy ({policy}) must be one of {LARGE_D_POLICIES}."
        )
    if n < 6 or 2 * d < n - 2 or d > n - 4:
        raise ValueError(
            f"(n, d) = ({n}, {d}) needs n >= 6 and (n - 2) / 2 <= d <= n - 4."
        )
    tail = frozenset(range(2 * n - 2 * d - 1, n + 1))
    excluded = {frozenset(range(n - d, n + 1))}
    second = frozenset(range(1, n - d - 1)) | tail
    if len(second) == d + 1:
        excluded.add(second)
    elif policy == "strict":
        raise ValueError(
            f"second excluded set {sorted(second)} has {len(second)} "
            f"members, not d + 1 = {d + 1}; pick policy 'literal' or 'pad'."
        )
    elif policy == "pad":
        excluded.add(frozenset(range(1, n - d)) | tail)
    else:
        logger.warning(
            "dropping excluded set %s of size %d", sorted(second), len(second)
        )
    return SimplicialComplex(
        n, [s for s in k_subsets(n, d + 1) if s not in excluded]
    )


def restrict_total(graph, n, d):
    """Drop the vertices beyond n without changing the total cut complex.

    Args:
      graph: Graph on N >= n vertices.
      n: int, number of vertices to keep.
      d: int, dimension of the total cut complex of graph with
        k = N - (d + 1).
    Returns:
      Graph H on 1..n with the same total cut complex for k = n - (d + 1).
    Raises:
      ValueError: if facets reach beyond n or share a common vertex.
    """
    big_n = graph.n
    if not 1 <= n <= big_n:
        raise ValueError(f"n ({n}) must lie in 1..{big_n}.")
    if n == big_n:
        return graph
    cplx = total_cut_complex(graph, big_n - (d + 1))
    if cplx.num_facets == 0:
        raise ValueError("total cut complex has no facets.")
    support = cplx.support()
    if support and max(support) > n:
        raise ValueError(
            f"facets use vertices {sorted(v for v in support if v > n)} "
            f"beyond {n}."
        )
    common = cplx.facet_intersection()
    if common:
        raise ValueError(f"all facets share the vertices {sorted(common)}.")
    restricted = graph.restrict(n)
    if total_cut_complex(restricted, n - (d + 1)) != cplx.with_ambient(n):
        raise RuntimeError("restriction changed the total cut complex.")
    return restricted


@dataclasses.dataclass(frozen=True)
class RealizationReport:
    n: int
    d: int
    chain_condition: bool
    neighbor_condition: bool
    realizations_found: tuple = ()
    exhausted_up_to: int = None

    def to_dict(self):
        return {
            "n": self.n,
            "d": self.d,
            "chain_condition": self.chain_condition,
            "neighbor_condition": self.neighbor_condition,
            "realizations_found": [
                {"vertex_count": count, "edges": graph.edges()}
                for count, graph in self.realizations_found
            ],
            "exhausted_up_to": self.exhausted_up_to,
        }


def realization_report(cplx, realizations=(), exhausted_up_to=None):
    """Bundle the necessary conditions with graphs found by a search.
    Args:
      cplx: SimplicialComplex, pure.
      realizations: iterable of Graphs, each realizing cplx with
        k = |V| - (d + 1).
      exhausted_up_to: int, largest vertex count searched completely.
    Returns:
      RealizationReport.
    """
    d = pure_dimension(cplx)
    found = []
    for graph in realizations:
        lifted = cplx.with_ambient(graph.n)
        if cut_complex(graph, graph.n - (d + 1)) != lifted:
            raise ValueError(f"{graph} does not realize the complex.")
        found.append((graph.n, graph))
    return RealizationReport(
        n=cplx.n,
        d=d,
        chain_condition=check_facet_chain_condition(cplx),
        neighbor_condition=check_facet_neighbor_condition(cplx),
        realizations_found=tuple(found),
        exhausted_up_to=exhausted_up_to,
    )
