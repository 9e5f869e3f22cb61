"""Twins, the P4 family, dominating pairs and the moves that preserve 3-cut
complexes.
"""
import dataclasses
import itertools
import logging

import numpy as np

from .shared_definition import ObstructionKind

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class P4Witness:
    """Vertices x, y, z, w and a set V' with N(x) = V' + y,
    N(y) = V' + {x, z}, N(z) = V' + {y, w} and N(w) = V' + z."""

    x: int
    y: int
    z: int
    w: int
    vprime: frozenset

    def holds_in(self, graph):
        path = (self.x, self.y, self.z, self.w)
        if len(set(path)) != 4 or self.vprime & set(path):
            return False
        if any(not 1 <= v <= graph.n for v in path):
            return False
        nb = graph.neighborhoods
        vp = self.vprime
        return (
            nb[self.x] == vp | {self.y}
            and nb[self.y] == vp | {self.x, self.z}
            and nb[self.z] == vp | {self.y, self.w}
            and nb[self.w] == vp | {self.z}
        )

    def to_dict(self):
        return {
            "x": self.x,
            "y": self.y,
            "z": self.z,
            "w": self.w,
            "vprime": sorted(self.vprime),
        }


@dataclasses.dataclass(frozen=True)
class Obstruction:
    kind: ObstructionKind
    witness: object

    def to_dict(self):
        if isinstance(self.witness, P4Witness):
            witness = self.witness.to_dict()
        else:
            witness = list(self.witness)
        return {"kind": self.kind.value, "witness": witness}


@dataclasses.dataclass(frozen=True)
class UniquenessVerdict:
    unique: bool
    obstructions: tuple = ()

    def to_dict(self):
        return {
            "unique": self.unique,
            "obstructions": [o.to_dict() for o in self.obstructions],
        }


def find_twins(graph):
    """Pairs (u, v), u < v, with N(u) - v == N(v) - u."""
    adj = graph.adjacency
    twins = []
    for a, b in itertools.combinations(range(graph.n), 2):
        diff = adj[a] ^ adj[b]
        diff[[a, b]] = False
        if not diff.any():
            twins.append((a + 1, b + 1))
    return twins


def find_p4_witnesses(graph):
    """Yield every P4 witness, ordered by (x, y).

    With V' fixed as N(x) - y, the neighborhood equations pin down z and
    then w, so only (x, y) needs to be searched.
    """
    nb = graph.neighborhoods
    for x in graph.vertices:
        for y in sorted(nb[x]):
            if len(nb[y]) != len(nb[x]) + 1:
                continue
            vprime = nb[x] - {y}
            if x not in nb[y] or not vprime <= nb[y]:
                continue
            rest = nb[y] - vprime - {x}
            if len(rest) != 1:
                continue
            (z,) = rest
            if y not in nb[z] or not vprime <= nb[z]:
                continue
            rest = nb[z] - vprime - {y}
            if len(rest) != 1:
                continue
            (w,) = rest
            if w in (x, y) or nb[w] != vprime | {z}:
                continue
            yield P4Witness(x, y, z, w, vprime)


def is_in_p4_family(graph):
    """First P4 witness of the graph, or None."""
    return next(find_p4_witnesses(graph), None)


def find_dominating_pairs(graph):
    """Pairs (u, v), u < v, with N(u) | N(v) equal to V or to V - {u, v}."""
    nb = graph.neighborhoods
    everything = frozenset(graph.vertices)
    pairs = []
    for u, v in itertools.combinations(graph.vertices, 2):
        union = nb[u] | nb[v]
        if union == everything or union == everything - {u, v}:
            pairs.append((u, v))
    return pairs


def flip_twin_edge(graph, u, v):
    """Toggle the edge between twins u and v.
    Raises:
      ValueError: if u and v are not twins.
    """
    if (min(u, v), max(u, v)) not in find_twins(graph):
        raise ValueError(f"vertices {u} and {v} are not twins.")
    return graph.toggle_edge(u, v)


def p4_swap(graph, witness):
    """Remove xy and zw, add xz and yw.
    Raises:
      ValueError: if the witness does not hold in the graph.
    """
    if not witness.holds_in(graph):
        raise ValueError(f"{witness} is not a P4 witness for this graph.")
    x, y, z, w = witness.x, witness.y, witness.z, witness.w
    return graph.with_edges(add=[(x, z), (y, w)], remove=[(x, y), (z, w)])


def is_unique_3cut(graph):
    """Whether the graph is the only one on its vertices with its 3-cut
    complex: true iff it has no twins and no P4 witness.

    Args:
      graph: Graph with n >= 5.
    Returns:
      UniquenessVerdict listing every twin pair and the first P4 witness.
    """
    if graph.n < 5:
        raise ValueError(f"n ({graph.n}) must be at least 5.")
    obstructions = [
        Obstruction(ObstructionKind.TWINS, pair) for pair in find_twins(graph)
    ]
    witness = is_in_p4_family(graph)
    if witness is not None:
        obstructions.append(
            Obstruction(ObstructionKind.P4_MEMBERSHIP, witness)
        )
    return UniquenessVerdict(not obstructions, tuple(obstructions))


def is_unique_total_3cut(graph):
    """Total-3-cut uniqueness: true iff no dominating pair exists (n >= 3)."""
    if graph.n < 3:
        raise ValueError(f"n ({graph.n}) must be at least 3.")
    obstructions = tuple(
        Obstruction(ObstructionKind.DOMINATING_PAIR, pair)
        for pair in find_dominating_pairs(graph)
    )
    return UniquenessVerdict(not obstructions, obstructions)


def is_promise_class(graph):
    """n >= 5, twin-free and outside the P4 family."""
    if graph.n < 5:
        return False
    if has_twins(graph):
        return False
    return is_in_p4_family(graph) is None


def has_twins(graph):
    """Vectorised twin test for large graphs."""
    adj = graph.adjacency
    n = graph.n
    # diff[a, b, c] = [a ~ c] xor [b ~ c], ignoring c in {a, b}.
    diff = adj[:, None, :] ^ adj[None, :, :]
    r = np.arange(n)
    diff[r, :, r] = False
    diff[:, r, r] = False
    counts = diff.sum(axis=2)
    counts[r, r] = 1
    return bool((counts == 0).any())
