"""Reconstruct a graph from its 3-cut complex.

Every unordered pair {u, v} is classified from the triple connectivity table
alone. The vertices other than u and v split into a connected side (those x
with {u, v, x} connected) and a disconnected side. The decision steps are:

  1. empty connected side: nonadjacent; empty disconnected side: adjacent.
  2. two vertices of the connected side forming a disconnected triple with
     u or with v: adjacent.
  3. two vertices of the disconnected side forming a connected triple with
     u or with v: nonadjacent.
  4. C = {(x, y) : x connected side, y disconnected side, {u, x, y}
     connected, {v, x, y} disconnected}, D the same with u and v exchanged.
     Both empty means u and v are twins: fail.
  5. two members of C (or of D) with distinct y: adjacent; with distinct x:
     nonadjacent.
  6. a single member overall, moved into D by exchanging u and v.
  7. one member in each of C and D.

The result is only trusted once the candidate passes the final gate in
``recognize_3cut``.
"""
import dataclasses
import logging

import numpy as np

from .builders import cut_complex, tri_connectivity_table
from .model import Graph
from .shared_definition import FailureKind, PairOutcome
from .shared_definition import STEP5_BOTH_PATTERNS, STEP5_TIE_BREAKS
from .shared_definition import STEP7_TRIPLE, STEP7_TRIPLES
from .structure import find_twins, has_twins, is_in_p4_family

logger = logging.getLogger(__name__)

ADJACENT = PairOutcome.ADJACENT
NONADJACENT = PairOutcome.NONADJACENT


@dataclasses.dataclass(frozen=True)
class PairClassification:
    u: int
    v: int
    connected_side: frozenset
    disconnected_side: frozenset
    c_pairs: frozenset
    d_pairs: frozenset


@dataclasses.dataclass(frozen=True)
class PairVerdict:
    outcome: PairOutcome
    fail_reason: str = None
    step: int = None

    def __post_init__(self):
        if self.outcome is PairOutcome.FAIL and not self.fail_reason:
            raise ValueError("a failed verdict needs a reason.")

    @property
    def adjacent(self):
        return self.outcome is ADJACENT


@dataclasses.dataclass(frozen=True)
class RecognitionFailure:
    kind: FailureKind
    detail: str
    candidate: Graph = None

    def to_dict(self):
        return {
            "kind": self.kind.value,
            "detail": self.detail,
            "candidate": None
            if self.candidate is None
            else self.candidate.edges(),
        }


def _check_options(step7_triple, step5_tie_break):
    if step7_triple not in STEP7_TRIPLES:
        raise ValueError(
            f"step7_triple ({step7_triple}) must be one of "
            f"{sorted(STEP7_TRIPLES)}."
        )
    if step5_tie_break not in STEP5_TIE_BREAKS:
        raise ValueError(
            f"step5_tie_break ({step5_tie_break}) must be one of "
            f"{STEP5_TIE_BREAKS}."
        )


def _check_pair(u, v, table):
    if table.n < 5:
        raise ValueError(f"n ({table.n}) must be at least 5.")
    for w in (u, v):
        if not 1 <= w <= table.n:
            raise ValueError(f"vertex {w} out of range 1..{table.n}.")
    if u == v:
        raise ValueError(f"pair ({u}, {v}) must have distinct vertices.")


def _sides(arr, a, b):
    """0-based indices of the connected and disconnected sides of (a, b)."""
    others = np.ones(arr.shape[0], dtype=bool)
    others[[a, b]] = False
    conn = arr[a, b] & others
    return np.flatnonzero(conn), np.flatnonzero(others & ~conn)


def _cross_pairs(arr, a, b, conn, disc):
    cross = np.ix_(conn, disc)
    at_a = arr[a][cross]
    at_b = arr[b][cross]
    labels = []
    for mask in (at_a & ~at_b, ~at_a & at_b):
        rows, cols = np.nonzero(mask)
        labels.append(
            [(int(conn[i]) + 1, int(disc[j]) + 1) for i, j in zip(rows, cols)]
        )
    return labels[0], labels[1]


def pair_classification(u, v, table):
    """Sides and C, D pairs of (u, v), with 1-based labels."""
    _check_pair(u, v, table)
    arr = table.array
    conn, disc = _sides(arr, u - 1, v - 1)
    c_pairs, d_pairs = _cross_pairs(arr, u - 1, v - 1, conn, disc)
    return PairClassification(
        u=u,
        v=v,
        connected_side=frozenset((conn + 1).tolist()),
        disconnected_side=frozenset((disc + 1).tolist()),
        c_pairs=frozenset(c_pairs),
        d_pairs=frozenset(d_pairs),
    )


def classify_pair(
    u,
    v,
    table,
    step7_triple=STEP7_TRIPLE,
    step5_tie_break=STEP5_BOTH_PATTERNS,
):
    """Decide whether u and v are adjacent.

    Args:
      u, v: int, distinct labels.
      table: TriConnectivityTable on n >= 5 vertices.
      step7_triple: str, key of STEP7_TRIPLES.
      step5_tie_break: str, one of STEP5_TIE_BREAKS.
    Returns:
      PairVerdict naming the step that decided.
    """
    _check_pair(u, v, table)
    _check_options(step7_triple, step5_tie_break)
    arr = table.array
    a, b = u - 1, v - 1
    conn, disc = _sides(arr, a, b)
    if conn.size == 0:
        return PairVerdict(NONADJACENT, step=1)
    if disc.size == 0:
        return PairVerdict(ADJACENT, step=1)

    sub = np.ix_(conn, conn)
    off_diagonal = ~np.eye(conn.size, dtype=bool)
    if ((~arr[a][sub] | ~arr[b][sub]) & off_diagonal).any():
        return PairVerdict(ADJACENT, step=2)
    sub = np.ix_(disc, disc)
    if (arr[a][sub] | arr[b][sub]).any():
        return PairVerdict(NONADJACENT, step=3)

    c_pairs, d_pairs = _cross_pairs(arr, a, b, conn, disc)
    return _decide_late(
        u,
        v,
        table,
        frozenset((conn + 1).tolist()),
        frozenset((disc + 1).tolist()),
        c_pairs,
        d_pairs,
        step7_triple,
        step5_tie_break,
    )


def _decide_late(
    u, v, table, connected, disconnected, c_pairs, d_pairs, step7, tie_break
):
    """Steps 4 to 7."""
    if not c_pairs and not d_pairs:
        return PairVerdict(
            PairOutcome.FAIL,
            f"C and D are empty; {u} and {v} look like twins.",
            step=4,
        )

    distinct_y = any(len({y for _, y in p}) > 1 for p in (c_pairs, d_pairs))
    distinct_x = any(len({x for x, _ in p}) > 1 for p in (c_pairs, d_pairs))
    if distinct_y and distinct_x:
        if tie_break == "adjacent":
            return PairVerdict(ADJACENT, step=5)
        if tie_break == "nonadjacent":
            return PairVerdict(NONADJACENT, step=5)
        return PairVerdict(
            PairOutcome.FAIL,
            f"C = {sorted(c_pairs)} and D = {sorted(d_pairs)} show both "
            "the distinct-x and the distinct-y pattern.",
            step=5,
        )
    if distinct_y:
        return PairVerdict(ADJACENT, step=5)
    if distinct_x:
        return PairVerdict(NONADJACENT, step=5)

    connected_at = table.connected
    if len(c_pairs) + len(d_pairs) == 1:
        if c_pairs:
            u, v = v, u
            (x, y) = c_pairs[0]
        else:
            (x, y) = d_pairs[0]
        others = disconnected - {y}
        if any(connected_at(x, y, z) for z in others):
            return PairVerdict(ADJACENT, step=6)
        if any(not connected_at(x, y, z) for z in connected - {x}):
            return PairVerdict(NONADJACENT, step=6)
        if others:
            if any(connected_at(u, x, z) for z in others):
                return PairVerdict(NONADJACENT, step=6)
            return PairVerdict(ADJACENT, step=6)
        if any(not connected_at(v, y, z) for z in connected - {x}):
            return PairVerdict(ADJACENT, step=6)
        return PairVerdict(NONADJACENT, step=6)

    (x1, y1), (x2, y2) = c_pairs[0], d_pairs[0]
    if x1 == x2:
        return PairVerdict(NONADJACENT, step=7)
    if y1 == y2:
        return PairVerdict(ADJACENT, step=7)
    roles = {"u": u, "x1": x1, "y1": y1, "x2": x2, "y2": y2}
    triple = [roles[r] for r in STEP7_TRIPLES[step7]]
    if connected_at(*triple):
        return PairVerdict(NONADJACENT, step=7)
    return PairVerdict(ADJACENT, step=7)


def _early_steps(arr, con, dis, a):
    """Outcome of steps 1 to 3 for (a, b), every b at once.

    Args:
      arr: [n, n, n] bool table.
      con, dis: [n, n, n] float32 indicators of connected and disconnected
        triples of distinct vertices.
      a: int, 0-based first vertex.
    Returns:
      outcome: [n] int8, 1 adjacent, 0 nonadjacent, -1 undecided.
      step: [n] int8, the step that decided.
    """
    n = arr.shape[0]
    others = np.ones((n, n), dtype=bool)
    np.fill_diagonal(others, False)
    others[:, a] = False
    conn = arr[a] & others
    disc = others & ~conn
    conn_f = conn.astype(np.float32)
    disc_f = disc.astype(np.float32)

    # sum of conn[b, x] * dis[c, x, x'] * conn[b, x'] for c in (a, b)
    via_a = ((conn_f @ dis[a]) * conn_f).sum(axis=1)
    via_b = (np.matmul(dis, conn_f[:, :, None])[:, :, 0] * conn_f).sum(axis=1)
    step2 = (via_a + via_b) > 0
    via_a = ((disc_f @ con[a]) * disc_f).sum(axis=1)
    via_b = (np.matmul(con, disc_f[:, :, None])[:, :, 0] * disc_f).sum(axis=1)
    step3 = (via_a + via_b) > 0

    outcome = np.full(n, -1, dtype=np.int8)
    step = np.zeros(n, dtype=np.int8)
    rules = [
        (~conn.any(axis=1), 0, 1),
        (~disc.any(axis=1), 1, 1),
        (step2, 1, 2),
        (step3, 0, 3),
    ]
    for hit, value, number in rules:
        fresh = hit & (outcome < 0)
        outcome[fresh] = value
        step[fresh] = number
    return outcome, step


def iter_pair_verdicts(table, batch=True, **options):
    """Yield ((u, v), PairVerdict) for u < v in lexicographic order.

    With ``batch`` the first three steps run for all pairs sharing u at once;
    pairs they leave open go through ``classify_pair``. Outcomes and steps
    match ``classify_pair`` exactly.
    """
    n = table.n
    if not batch:
        for u in range(1, n + 1):
            for v in range(u + 1, n + 1):
                yield (u, v), classify_pair(u, v, table, **options)
        return
    if n < 5:
        raise ValueError(f"n ({n}) must be at least 5.")
    arr = table.array
    con = arr.astype(np.float32)
    # Only x != x' matters; the table already clears repeats involving c.
    dis = (~arr).astype(np.float32)
    r = np.arange(n)
    dis[:, r, r] = 0.0
    for a in range(n - 1):
        outcome, step = _early_steps(arr, con, dis, a)
        for b in range(a + 1, n):
            if outcome[b] < 0:
                verdict = classify_pair(a + 1, b + 1, table, **options)
            else:
                verdict = PairVerdict(
                    ADJACENT if outcome[b] else NONADJACENT, step=int(step[b])
                )
            yield (a + 1, b + 1), verdict


def pair_verdicts(table, batch=True, **options):
    return dict(iter_pair_verdicts(table, batch=batch, **options))


def reconstruct_from_table(table, batch=True, **options):
    """Assemble a graph from the verdicts of every pair.
    Args:
      table: TriConnectivityTable on n >= 5 vertices.
      batch: bool, vectorise the first three steps.
      **options: passed to classify_pair.
    Returns:
      Graph, or RecognitionFailure(PAIR_UNDECIDABLE) for the first pair
      that fails.
    """
    _check_options(
        options.get("step7_triple", STEP7_TRIPLE),
        options.get("step5_tie_break", STEP5_BOTH_PATTERNS),
    )
    adj = np.zeros((table.n, table.n), dtype=bool)
    for (u, v), verdict in iter_pair_verdicts(table, batch=batch, **options):
        if verdict.outcome is PairOutcome.FAIL:
            return RecognitionFailure(
                FailureKind.PAIR_UNDECIDABLE,
                f"pair ({u}, {v}) failed at step {verdict.step}: "
                f"{verdict.fail_reason}",
            )
        adj[u - 1, v - 1] = adj[v - 1, u - 1] = verdict.adjacent
    return Graph(table.n, adj)


def recognize_3cut(cplx, **options):
    """Find the unique twin-free graph outside the P4 family whose 3-cut
    complex is cplx.

    Args:
      cplx: SimplicialComplex.
      **options: step7_triple, step5_tie_break, batch.
    Returns:
      Graph on success, otherwise a RecognitionFailure.
    """
    if cplx.n >= 5 and cplx.num_facets == 0:
        # Every triple is connected: the complement is a matching.
        return RecognitionFailure(
            FailureKind.OUTSIDE_PROMISE,
            "complex has no facets; every graph realizing it has twins.",
        )
    try:
        table = tri_connectivity_table(cplx)
    except ValueError as e:
        return RecognitionFailure(FailureKind.BAD_DIMENSION, str(e))

    candidate = reconstruct_from_table(table, **options)
    if isinstance(candidate, RecognitionFailure):
        logger.info("recognition failed: %s", candidate.detail)
        return candidate

    if cut_complex(candidate, 3) != cplx:
        return RecognitionFailure(
            FailureKind.VERIFICATION_MISMATCH,
            "3-cut complex of the reconstructed graph differs from the input.",
            candidate,
        )
    if has_twins(candidate):
        return RecognitionFailure(
            FailureKind.OUTSIDE_PROMISE,
            f"reconstructed graph has twins {find_twins(candidate)}.",
            candidate,
        )
    witness = is_in_p4_family(candidate)
    if witness is not None:
        return RecognitionFailure(
            FailureKind.OUTSIDE_PROMISE,
            f"reconstructed graph is in the P4 family: {witness}.",
            candidate,
        )
    logger.debug("recognized %r", candidate)
    return candidate
