"""Brute-force sweeps over labeled graphs.

Each sweep splits its scope into fixed work items (edge-mask ranges, class
chunks or seeded sample chunks), runs them serially or on a process pool,
and merges the partial reports in item order. Verdicts about 3-cut
complexes come from the builders only, never from recognition.
"""
import dataclasses
import functools
import itertools
import logging
import math
import time
from multiprocessing import Pool

import numpy as np
import tqdm
from scipy import stats
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from cutcomplex.complexes import builders, realization, recognition
from cutcomplex.complexes import structure
from cutcomplex.complexes.model import SimplicialComplex, complement
from cutcomplex.complexes.model import subset_index
from cutcomplex.complexes.shared_definition import FULL_ENUMERATION_LIMIT
from cutcomplex.complexes.shared_definition import LARGE_ENUMERATION_LIMIT
from cutcomplex.complexes.shared_definition import MAX_SAMPLED_N
from cutcomplex.complexes.shared_definition import REPORT_FORMAT
from cutcomplex.complexes.shared_definition import STEP7_TRIPLE
from graph_dataloader import LabeledGraphStream, PromiseClassSampler
from graph_dataloader import RandomGraphSampler, enumerate_graphs
from graph_dataloader import graph_from_mask

logger = logging.getLogger("cutcomplex.oracle")

CHUNK_SIZE = 2048
SAMPLE_CHUNK_SIZE = 500
CLASS_CHUNK_SIZE = 256
# Examples kept per list in a report.
MAX_LISTED = 50


@dataclasses.dataclass
class OracleReport:
    mode: str
    n: int
    checked: int = 0
    violations: list = dataclasses.field(default_factory=list)
    elapsed: float = 0.0
    extras: dict = dataclasses.field(default_factory=dict)

    @property
    def ok(self):
        return not self.violations

    def merge(self, other):
        """Sum the counters, concatenate the lists, keep self's scope."""
        if self.mode != other.mode:
            raise ValueError(
                f"cannot merge a {other.mode} report into a {self.mode} one."
            )
        extras = dict(self.extras)
        for key, value in other.extras.items():
            mine = extras.get(key)
            if isinstance(mine, list) and isinstance(value, list):
                extras[key] = mine + value
            elif _is_count(mine) and _is_count(value):
                extras[key] = mine + value
            else:
                extras[key] = value
        return OracleReport(
            mode=self.mode,
            n=self.n,
            checked=self.checked + other.checked,
            violations=self.violations + other.violations,
            elapsed=self.elapsed + other.elapsed,
            extras=extras,
        )

    def to_dict(self):
        return {
            "format": REPORT_FORMAT,
            "mode": self.mode,
            "n": self.n,
            "checked": self.checked,
            "violations": self.violations,
            "elapsed": round(self.elapsed, 3),
            "extras": self.extras,
            "ok": self.ok,
        }

    def to_text(self):
        lines = [
            f"{REPORT_FORMAT} mode={self.mode} n={self.n}",
            f"checked: {self.checked}",
            f"violations: {len(self.violations)}",
            f"elapsed: {self.elapsed:.2f}s",
        ]
        for key in sorted(self.extras):
            value = self.extras[key]
            if isinstance(value, list) and len(value) > 8:
                value = f"{len(value)} entries"
            lines.append(f"{key}: {value}")
        for violation in self.violations[:MAX_LISTED]:
            lines.append(f"  violation: {violation}")
        lines.append("result: " + ("ok" if self.ok else "FAILED"))
        return "\n".join(lines)


def _is_count(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _graph_entry(graph):
    return {"n": graph.n, "edges": [list(e) for e in graph.edges()]}


def _call(worker, index, item):
    return index, worker(*item)


def run_work_items(worker, items, jobs=1, desc=None):
    """Run worker(*item) for every item.
    Args:
      worker: module-level function.
      items: list of argument tuples.
      jobs: int, number of processes; 1 runs in this process.
      desc: str, progress bar label.
    Returns:
      list of results in item order, whatever the completion order.
    """
    if jobs < 1:
        raise ValueError(f"jobs ({jobs}) must be at least 1.")
    results = [None] * len(items)
    errors = []
    pbar = tqdm.tqdm(total=len(items), desc=desc, disable=None)

    def update(result):
        index, value = result
        results[index] = value
        pbar.update()

    if jobs == 1:
        for index, item in enumerate(items):
            update(_call(worker, index, item))
    else:
        pool = Pool(processes=jobs)
        for index, item in enumerate(items):
            pool.apply_async(
                _call,
                args=(worker, index, item),
                callback=update,
                error_callback=errors.append,
            )
        pool.close()
        pool.join()
    pbar.close()
    if errors:
        raise RuntimeError(
            f"{len(errors)} work items failed; first: {errors[0]!r}"
        ) from errors[0]
    return results


def _merge_all(reports, empty):
    return functools.reduce(OracleReport.merge, reports, empty)


def _finish(report, start_time):
    report.elapsed = time.perf_counter() - start_time
    logger.info(
        "%s n=%s: %d checked, %d violations, %.1fs",
        report.mode,
        report.n,
        report.checked,
        len(report.violations),
        report.elapsed,
    )
    return report


def _mask_bits(n, start, stop):
    shifts = np.arange(math.comb(n, 2), dtype=np.int64)
    masks = np.arange(start, stop, dtype=np.int64)
    return ((masks[:, None] >> shifts) & 1).astype(bool)


def _triple_keys(counts, total=False):
    """One integer per graph: bit t marks triple t disconnected (or, with
    ``total``, independent). Needs at most 64 triples."""
    hit = counts == 0 if total else counts < 2
    weights = np.left_shift(
        np.uint64(1), np.arange(hit.shape[1], dtype=np.uint64)
    )
    return (hit.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)


def _all_keys(n, total=False):
    bits = _mask_bits(n, 0, 1 << math.comb(n, 2))
    return _triple_keys(builders.triple_edge_counts(n, bits), total)


def _classes(keys):
    """Masks grouped by key, each group in increasing mask order."""
    order = np.argsort(keys, kind="stable")
    bounds = np.flatnonzero(np.diff(keys[order])) + 1
    return np.split(order, bounds)


def _moves(graph):
    """Yield (moved graph, label) for every twin flip and P4 swap."""
    for u, v in structure.find_twins(graph):
        yield structure.flip_twin_edge(graph, u, v), f"twin flip {u}-{v}"
    for w in structure.find_p4_witnesses(graph):
        yield structure.p4_swap(graph, w), f"P4 swap {w.x}-{w.y}-{w.z}-{w.w}"


def count_class_members(graph, limit=None):
    """Number of graphs on the same vertices with the same 3-cut complex.

    Backtracks over the edge slots in lexicographic order. After each slot
    every triple through it is pruned by the edge-count rule: a
    disconnected triple spans at most one edge, a connected one at least
    two. Complete assignments are confirmed with cut_complex.

    Args:
      graph: Graph on n >= 3 vertices.
      limit: int or None, stop counting once this many are found.
    Returns:
      int, at least 1 (the graph itself), at most limit.
    """
    n = graph.n
    if n < 3:
        raise ValueError(f"n ({n}) must be at least 3.")
    target = builders.cut_complex(graph, 3)
    pairs = subset_index(n, 2)
    slot = {(int(a), int(b)): i for i, (a, b) in enumerate(pairs)}
    disconnected = builders.cut_mask(graph, 3)
    touching = [[] for _ in range(len(pairs))]
    for t, (a, b, c) in enumerate(subset_index(n, 3)):
        slots = (slot[(a, b)], slot[(a, c)], slot[(b, c)])
        for s in slots:
            touching[s].append((bool(disconnected[t]), slots))
    bits = np.zeros(len(pairs), dtype=bool)

    def feasible(i):
        for cut, slots in touching[i]:
            edges = sum(1 for s in slots if s <= i and bits[s])
            if cut and edges > 1:
                return False
            if not cut and edges + sum(1 for s in slots if s > i) < 2:
                return False
        return True

    def extend(i, budget):
        if i == len(pairs):
            candidate = graph_from_mask(
                n, sum(1 << int(s) for s in np.flatnonzero(bits))
            )
            if builders.cut_complex(candidate, 3) != target:
                raise RuntimeError(
                    f"pruned search accepted {candidate} outside the class."
                )
            return 1
        found = 0
        for value in (False, True):
            bits[i] = value
            if feasible(i):
                rest = None if budget is None else budget - found
                found += extend(i + 1, rest)
                if budget is not None and found >= budget:
                    break
        bits[i] = False
        return found

    return extend(0, limit)


# uniqueness ----------------------------------------------------------------


def _uniqueness_chunk(n, start, stop, total):
    stream = LabeledGraphStream(n, allow_large=True)
    counts = builders.triple_edge_counts(n, _mask_bits(n, start, stop))
    keys = _triple_keys(counts, total)
    check = structure.is_unique_3cut
    if total:
        check = structure.is_unique_total_3cut
    verdicts = np.fromiter(
        (check(g).unique for g in stream.iter_range(start, stop)),
        dtype=bool,
        count=stop - start,
    )
    return keys, verdicts


def _exhaustive_uniqueness(mode, n, total, jobs, allow_large):
    stream = enumerate_graphs(n, allow_large=allow_large)
    items = [
        (n, start, stop, total)
        for start, stop in stream.work_items(CHUNK_SIZE)
    ]
    parts = run_work_items(_uniqueness_chunk, items, jobs, desc=mode)
    keys = np.concatenate([p[0] for p in parts])
    verdicts = np.concatenate([p[1] for p in parts])
    _, inverse, sizes = np.unique(
        keys, return_inverse=True, return_counts=True
    )
    inverse = inverse.reshape(-1)
    alone = sizes[inverse] == 1
    report = OracleReport(
        mode,
        n,
        checked=len(keys),
        extras={"classes": int(len(sizes)), "unique_graphs": int(alone.sum())},
    )
    for mask in np.flatnonzero(alone != verdicts):
        report.violations.append(
            {
                "graph": _graph_entry(stream[int(mask)]),
                "class_size": int(sizes[inverse[mask]]),
                "predicted_unique": bool(verdicts[mask]),
            }
        )
    return report


def _sampled_uniqueness_chunk(sampler):
    report = OracleReport("uniqueness", sampler.n, extras={"sampled": True})
    for graph in sampler:
        report.checked += 1
        size = count_class_members(graph, limit=2)
        verdict = structure.is_unique_3cut(graph)
        if (size == 1) != verdict.unique:
            report.violations.append(
                {
                    "graph": _graph_entry(graph),
                    "class_size_at_least": size,
                    "predicted": verdict.to_dict(),
                }
            )
    return report


def verify_uniqueness_theorem(
    n, jobs=1, sample_size=1000, seed=1, full=False
):
    """A graph is alone in its 3-cut class iff it has no twins and no P4
    witness.

    n = 5, 6 run over every labeled graph; n = 7 does too with ``full``,
    otherwise it checks sample_size random graphs with the exact class
    counter.
    """
    if not 5 <= n <= LARGE_ENUMERATION_LIMIT:
        raise ValueError(
            f"n ({n}) must lie in 5..{LARGE_ENUMERATION_LIMIT} for the "
            "uniqueness sweep."
        )
    start_time = time.perf_counter()
    if n <= FULL_ENUMERATION_LIMIT or full:
        report = _exhaustive_uniqueness("uniqueness", n, False, jobs, full)
    else:
        sampler = RandomGraphSampler(n, sample_size, seed=seed)
        items = [(s,) for s in sampler.split(SAMPLE_CHUNK_SIZE)]
        parts = run_work_items(
            _sampled_uniqueness_chunk, items, jobs, desc="uniqueness"
        )
        report = _merge_all(parts, OracleReport("uniqueness", n))
    return _finish(report, start_time)


def verify_total_uniqueness_theorem(n, jobs=1):
    """A graph is alone in its total 3-cut class iff it has no dominating
    pair. Exhaustive for 3 <= n <= 6."""
    if not 3 <= n <= FULL_ENUMERATION_LIMIT:
        raise ValueError(
            f"n ({n}) must lie in 3..{FULL_ENUMERATION_LIMIT} for the total "
            "uniqueness sweep."
        )
    start_time = time.perf_counter()
    report = _exhaustive_uniqueness("total-uniqueness", n, True, jobs, False)
    return _finish(report, start_time)


# recognition ---------------------------------------------------------------


def _recognition_problem(graph, cplx, result, promise):
    if isinstance(result, recognition.RecognitionFailure):
        if promise:
            return (
                f"failed on a promise-class graph: {result.kind.value}: "
                f"{result.detail}"
            )
        return None
    if builders.cut_complex(result, 3) != cplx:
        return "returned graph has a different 3-cut complex"
    if result != graph:
        return f"returned {result.edges()} instead of the input"
    return None


def _recognition_chunk(n, start, stop, step7_triple):
    report = OracleReport(
        "recognition", n, extras={"promise_graphs": 0, "asymmetric_pairs": 0}
    )
    options = {"step7_triple": step7_triple}
    stream = LabeledGraphStream(n, allow_large=True)
    for graph in stream.iter_range(start, stop):
        report.checked += 1
        promise = structure.is_promise_class(graph)
        report.extras["promise_graphs"] += int(promise)
        cplx = builders.cut_complex(graph, 3)
        result = recognition.recognize_3cut(cplx, **options)
        problem = _recognition_problem(graph, cplx, result, promise)
        if problem:
            report.violations.append(
                {"graph": _graph_entry(graph), "problem": problem}
            )
        if cplx.num_facets == 0:
            continue
        table = builders.tri_connectivity_table(cplx)
        pairwise = recognition.pair_verdicts(table, batch=False, **options)
        batched = recognition.pair_verdicts(table, batch=True, **options)
        if pairwise != batched:
            pair = next(p for p in pairwise if pairwise[p] != batched[p])
            report.violations.append(
                {
                    "graph": _graph_entry(graph),
                    "problem": f"batch and pairwise verdicts differ at {pair}",
                }
            )
        for (u, v), verdict in pairwise.items():
            mirrored = recognition.classify_pair(v, u, table, **options)
            if mirrored.outcome is not verdict.outcome:
                if promise:
                    report.violations.append(
                        {
                            "graph": _graph_entry(graph),
                            "problem": f"pair ({u}, {v}) is not symmetric",
                        }
                    )
                else:
                    report.extras["asymmetric_pairs"] += 1
            if promise and verdict.adjacent != graph.has_edge(u, v):
                report.violations.append(
                    {
                        "graph": _graph_entry(graph),
                        "problem": f"pair ({u}, {v}) decided wrongly at "
                        f"step {verdict.step}",
                    }
                )
    return report


def _sampled_recognition_chunk(sampler, step7_triple):
    report = OracleReport("recognition", sampler.n, extras={"sampled": True})
    for graph in sampler:
        report.checked += 1
        cplx = builders.cut_complex(graph, 3)
        result = recognition.recognize_3cut(cplx, step7_triple=step7_triple)
        problem = _recognition_problem(graph, cplx, result, True)
        if problem:
            report.violations.append(
                {"graph": _graph_entry(graph), "problem": problem}
            )
    return report


def verify_recognition(
    n,
    sample_size=10000,
    seed=1,
    jobs=1,
    full=False,
    step7_triple=STEP7_TRIPLE,
):
    """Recognition returns exactly the input on the promise class and a
    failure elsewhere.

    Exhaustive runs also compare batched with pairwise verdicts, check
    that classify_pair is symmetric and, on the promise class, that every
    pair verdict matches the graph. Beyond 6 vertices (7 without ``full``)
    sample_size promise-class graphs are drawn instead.
    """
    if not 5 <= n <= MAX_SAMPLED_N:
        raise ValueError(
            f"n ({n}) must lie in 5..{MAX_SAMPLED_N} for the recognition "
            "sweep."
        )
    start_time = time.perf_counter()
    exhaustive = n <= FULL_ENUMERATION_LIMIT or (
        full and n <= LARGE_ENUMERATION_LIMIT
    )
    if exhaustive:
        stream = enumerate_graphs(n, allow_large=full)
        items = [
            (n, start, stop, step7_triple)
            for start, stop in stream.work_items(CHUNK_SIZE)
        ]
        parts = run_work_items(
            _recognition_chunk, items, jobs, desc="recognition"
        )
    else:
        sampler = PromiseClassSampler(n, sample_size, seed=seed)
        items = [(s, step7_triple) for s in sampler.split(SAMPLE_CHUNK_SIZE)]
        parts = run_work_items(
            _sampled_recognition_chunk, items, jobs, desc="recognition"
        )
    report = _merge_all(parts, OracleReport("recognition", n))
    report.extras["step7_triple"] = step7_triple
    return _finish(report, start_time)


# realizations --------------------------------------------------------------


def _realization_chunk(n, k, total, want, start, stop):
    if k == 3:
        counts = builders.triple_edge_counts(n, _mask_bits(n, start, stop))
        hit = counts == 0 if total else counts < 2
        return (np.flatnonzero((hit == want).all(axis=1)) + start).tolist()
    mask_of = builders.independent_mask if total else builders.cut_mask
    stream = LabeledGraphStream(n, allow_large=True)
    return [
        mask
        for mask, graph in enumerate(stream.iter_range(start, stop), start)
        if np.array_equal(mask_of(graph, k), want)
    ]


def find_realizations(
    cplx, target_n, total=False, d=None, allow_large=False, jobs=1
):
    """Every graph on 1..target_n whose (total) cut complex with
    k = target_n - (d + 1) is cplx, viewed on 1..target_n.

    Args:
      cplx: SimplicialComplex.
      target_n: int, at least cplx.n.
      total: bool, compare total cut complexes.
      d: int, needed only when cplx has no facets.
      allow_large: bool, permit target_n = 7.
      jobs: int, worker processes.
    Returns:
      list of Graph in edge-mask order.
    """
    if cplx.num_facets:
        dim = builders.pure_dimension(cplx)
        if d is not None and d != dim:
            raise ValueError(f"d ({d}) does not match the dimension ({dim}).")
        d = dim
    elif d is None:
        raise ValueError("complex has no facets; pass d explicitly.")
    if target_n < cplx.n:
        raise ValueError(
            f"target_n ({target_n}) must be at least n ({cplx.n})."
        )
    k = target_n - (d + 1)
    upper = target_n if total else target_n - 1
    if not 1 <= k <= upper:
        raise ValueError(
            f"k = target_n - (d + 1) = {k} must lie in 1..{upper}."
        )
    stream = enumerate_graphs(target_n, allow_large=allow_large)
    cofacets = cplx.with_ambient(target_n).cofacet_set
    want = np.array(
        [
            frozenset((row + 1).tolist()) in cofacets
            for row in subset_index(target_n, k)
        ],
        dtype=bool,
    )
    items = [
        (target_n, k, total, want, start, stop)
        for start, stop in stream.work_items(CHUNK_SIZE)
    ]
    parts = run_work_items(_realization_chunk, items, jobs, desc="realize")
    return [stream[m] for m in itertools.chain.from_iterable(parts)]


def verify_lower_bound(
    n=5,
    d=1,
    family="counter-small",
    policy="strict",
    allow_large=False,
    jobs=1,
):
    """The family's complex has no realization on n or n + 1 vertices."""
    if family == "counter-small":
        cplx = realization.counterexample_small_d(n, d)
    elif family == "counter-large":
        cplx = realization.counterexample_large_d(n, d, policy=policy)
    else:
        raise ValueError(
            f"family ({family}) must be one of "
            "['counter-small', 'counter-large']."
        )
    limit = LARGE_ENUMERATION_LIMIT if allow_large else FULL_ENUMERATION_LIMIT
    targets = [t for t in (n, n + 1) if t <= limit]
    if not targets:
        raise ValueError(
            f"n ({n}) leaves no target vertex count within 1..{limit}."
        )
    start_time = time.perf_counter()
    report = OracleReport(
        "lower-bound",
        n,
        extras={
            "d": d,
            "family": family,
            "policy": policy,
            "targets": targets,
            "facets": cplx.num_facets,
        },
    )
    for target in targets:
        found = find_realizations(
            cplx, target, d=d, allow_large=allow_large, jobs=jobs
        )
        report.checked += 1 << math.comb(target, 2)
        for graph in found[:MAX_LISTED]:
            report.violations.append(
                {"target_n": target, "graph": _graph_entry(graph)}
            )
    return _finish(report, start_time)


# moves ---------------------------------------------------------------------


def _check_move_scope(n, what):
    if not 4 <= n <= FULL_ENUMERATION_LIMIT:
        raise ValueError(
            f"n ({n}) must lie in 4..{FULL_ENUMERATION_LIMIT} for {what}."
        )


def _flip_chunk(n, classes):
    report = OracleReport(
        "flip-search",
        n,
        extras={"moves": 0, "disconnected_count": 0, "disconnected": []},
    )
    for members in classes:
        position = {mask: i for i, mask in enumerate(members)}
        rows, cols = [], []
        for i, mask in enumerate(members):
            graph = graph_from_mask(n, mask)
            for moved, label in _moves(graph):
                report.extras["moves"] += 1
                j = position.get(moved.edge_mask())
                if j is None:
                    report.violations.append(
                        {
                            "move": label,
                            "graph": _graph_entry(graph),
                            "changed_complex": True,
                        }
                    )
                    continue
                rows.append(i)
                cols.append(j)
        size = len(members)
        moves = csr_matrix(
            (np.ones(len(rows)), (rows, cols)), shape=(size, size)
        )
        n_parts, labels = connected_components(moves, directed=False)
        if n_parts > 1:
            report.extras["disconnected_count"] += 1
            if len(report.extras["disconnected"]) < MAX_LISTED:
                report.extras["disconnected"].append(
                    {
                        "size": size,
                        "component_sizes": np.bincount(labels).tolist(),
                        "members": [
                            _graph_entry(graph_from_mask(n, m))["edges"]
                            for m in members[:8]
                        ],
                    }
                )
    return report


def _class_items(n):
    keys = _all_keys(n)
    classes = [c.tolist() for c in _classes(keys) if len(c) > 1]
    items = [
        (n, classes[i : i + CLASS_CHUNK_SIZE])
        for i in range(0, len(classes), CLASS_CHUNK_SIZE)
    ]
    return keys, classes, items


def search_flip_connectivity(n, jobs=1):
    """Within every 3-cut class, are all members linked by twin flips and
    P4 swaps? Disconnected classes are reported in extras, not as
    violations; a move leaving its class is a violation."""
    _check_move_scope(n, "the flip search")
    start_time = time.perf_counter()
    keys, classes, items = _class_items(n)
    parts = run_work_items(_flip_chunk, items, jobs, desc="flip-search")
    report = _merge_all(parts, OracleReport("flip-search", n))
    report.checked = len(keys)
    report.extras["classes"] = int(len(np.unique(keys)))
    report.extras["nontrivial_classes"] = len(classes)
    return _finish(report, start_time)


def _invariance_chunk(n, start, stop):
    report = OracleReport("invariance", n, extras={"moves": 0})
    stream = LabeledGraphStream(n, allow_large=True)
    for graph in stream.iter_range(start, stop):
        report.checked += 1
        base = builders.cut_complex(graph, 3)
        for moved, label in _moves(graph):
            report.extras["moves"] += 1
            if builders.cut_complex(moved, 3) != base:
                report.violations.append(
                    {"move": label, "graph": _graph_entry(graph)}
                )
    return report


def verify_move_invariance(n, jobs=1):
    """Every twin flip and P4 swap of every graph keeps its 3-cut complex."""
    _check_move_scope(n, "the invariance sweep")
    start_time = time.perf_counter()
    stream = enumerate_graphs(n)
    items = [(n, a, b) for a, b in stream.work_items(CHUNK_SIZE)]
    parts = run_work_items(_invariance_chunk, items, jobs, desc="invariance")
    report = _merge_all(parts, OracleReport("invariance", n))
    return _finish(report, start_time)


def _twin_chunk(n, classes):
    report = OracleReport("twin-corollary", n, extras={"nested_pairs": 0})
    slots = subset_index(n, 2) + 1
    for members in classes:
        twins = {}
        for small, large in itertools.permutations(members, 2):
            if small & large != small:
                continue
            report.extras["nested_pairs"] += 1
            if small not in twins:
                twins[small] = set(
                    structure.find_twins(graph_from_mask(n, small))
                )
            extra = large & ~small
            for s in range(len(slots)):
                pair = (int(slots[s, 0]), int(slots[s, 1]))
                if extra >> s & 1 and pair not in twins[small]:
                    report.violations.append(
                        {
                            "smaller": _graph_entry(graph_from_mask(n, small)),
                            "larger": _graph_entry(graph_from_mask(n, large)),
                            "edge": list(pair),
                        }
                    )
    return report


def verify_twin_corollary(n, jobs=1):
    """If two graphs share a 3-cut complex and the edges of one strictly
    contain those of the other, every extra edge joins twins of the smaller
    graph."""
    _check_move_scope(n, "the twin corollary sweep")
    start_time = time.perf_counter()
    keys, _, items = _class_items(n)
    parts = run_work_items(_twin_chunk, items, jobs, desc="twin-corollary")
    report = _merge_all(parts, OracleReport("twin-corollary", n))
    report.checked = len(keys)
    return _finish(report, start_time)


# realization conditions and constructions ----------------------------------


def _conditions_chunk(n, start, stop, ks):
    report = OracleReport(
        "conditions", n, extras={"complexes": 0, "empty_complexes": 0}
    )
    stream = LabeledGraphStream(n, allow_large=True)
    for graph in stream.iter_range(start, stop):
        report.checked += 1
        for k in ks:
            cplx = builders.cut_complex(graph, k)
            if cplx.num_facets == 0:
                report.extras["empty_complexes"] += 1
                continue
            report.extras["complexes"] += 1
            chain = realization.check_facet_chain_condition(cplx)
            neighbor = realization.check_facet_neighbor_condition(cplx)
            if not (chain and neighbor):
                report.violations.append(
                    {
                        "graph": _graph_entry(graph),
                        "k": k,
                        "chain_condition": chain,
                        "neighbor_condition": neighbor,
                    }
                )
    return report


def verify_necessary_conditions(n, jobs=1):
    """Both realization conditions hold on every nonempty 3-cut and
    (n - 3)-cut complex, and fail on the small-d counterexample on 5
    vertices."""
    if n not in (5, 6):
        raise ValueError(f"n ({n}) must be 5 or 6 for the conditions sweep.")
    start_time = time.perf_counter()
    ks = sorted({3, n - 3})
    stream = enumerate_graphs(n)
    items = [(n, a, b, ks) for a, b in stream.work_items(CHUNK_SIZE)]
    parts = run_work_items(_conditions_chunk, items, jobs, desc="conditions")
    report = _merge_all(parts, OracleReport("conditions", n))
    report.extras["k"] = ks

    counter = realization.counterexample_small_d(5, 1)
    verdicts = {
        "chain_condition": realization.check_facet_chain_condition(counter),
        "neighbor_condition": realization.check_facet_neighbor_condition(
            counter
        ),
    }
    report.extras["counterexample"] = verdicts
    if any(verdicts.values()):
        report.violations.append(
            {"counterexample": "counter-small (5, 1)", **verdicts}
        )
    return _finish(report, start_time)


def _construction_chunk(family, n):
    report = OracleReport("constructions", n, extras={f"{family}_inputs": 0})
    if family == "dim0":
        choices = range(1, n + 1)
    else:
        choices = range(0, n + 1)
    for r in choices:
        for chosen in itertools.combinations(range(1, n + 1), r):
            report.checked += 1
            report.extras[f"{family}_inputs"] += 1
            if family == "dim0":
                cplx = SimplicialComplex(n, [{x} for x in chosen])
                graph = realization.realize_dim0(cplx, n)
                ok = builders.cut_complex(graph, n - 1) == cplx
            else:
                cplx = SimplicialComplex(
                    n, [{a} for a in chosen], complemented=True
                )
                graph = realization.realize_codim2(cplx)
                ok = builders.cut_complex(graph, 2) == cplx.with_ambient(n + 1)
            if not ok:
                report.violations.append(
                    {
                        "family": family,
                        "facets": [sorted(f) for f in cplx.facets],
                        "graph": _graph_entry(graph),
                    }
                )
    return report


def verify_constructions(max_dim0_n=8, max_codim2_n=6, jobs=1):
    """Both explicit constructions realize every valid input."""
    if not 3 <= max_dim0_n <= 12:
        raise ValueError(f"max_dim0_n ({max_dim0_n}) must lie in 3..12.")
    if not 2 <= max_codim2_n <= 10:
        raise ValueError(f"max_codim2_n ({max_codim2_n}) must lie in 2..10.")
    start_time = time.perf_counter()
    items = [("dim0", n) for n in range(3, max_dim0_n + 1)]
    items += [("codim2", n) for n in range(2, max_codim2_n + 1)]
    parts = run_work_items(
        _construction_chunk, items, jobs, desc="constructions"
    )
    n = max(max_dim0_n, max_codim2_n)
    report = _merge_all(parts, OracleReport("constructions", n))
    return _finish(report, start_time)


# duality -------------------------------------------------------------------


def _duality_chunk(m, start, stop):
    report = OracleReport("duality", m)
    stream = LabeledGraphStream(m, allow_large=True)
    for graph in stream.iter_range(start, stop):
        report.checked += 1
        dual = realization.dual_complex_d4(
            builders.cut_complex(graph, 3), d=m - 4
        )
        if dual != builders.cut_complex(complement(graph), 3):
            report.violations.append({"graph": _graph_entry(graph)})
    return report


def _realizability_equivalence(m, report):
    """Over every complex of 2-sets on 5 vertices: realizable iff its dual
    is, with complementary witnesses."""
    triples = [frozenset((row + 1).tolist()) for row in subset_index(m, 3)]
    position = {t: i for i, t in enumerate(triples)}
    keys = _all_keys(m)
    witness = {}
    for mask, key in enumerate(keys.tolist()):
        witness.setdefault(key, mask)
    realizable = 0
    for key in range(1 << len(triples)):
        cuts = [t for i, t in enumerate(triples) if key >> i & 1]
        cplx = SimplicialComplex(m, cuts, complemented=True)
        dual = realization.dual_complex_d4(cplx, d=m - 4)
        dual_key = sum(1 << position[t] for t in dual.cofacet_set)
        realizable += int(key in witness)
        if (key in witness) != (dual_key in witness):
            report.violations.append(
                {"cofacets": [sorted(t) for t in cplx.cofacets]}
            )
        elif key in witness:
            partner = complement(graph_from_mask(m, witness[key]))
            if builders.cut_complex(partner, 3) != dual:
                report.violations.append(
                    {"witness": _graph_entry(partner), "dual_of": key}
                )
    report.extras["candidate_complexes"] = 1 << len(triples)
    report.extras["realizable_complexes"] = realizable


def verify_duality(m, jobs=1):
    """dual_complex_d4 of a 3-cut complex on m = d + 4 vertices is the
    3-cut complex of the complement graph. For m = 5 also checks that
    realizability is preserved by the duality."""
    if m not in (5, 6):
        raise ValueError(f"m ({m}) must be 5 or 6 for the duality sweep.")
    start_time = time.perf_counter()
    stream = enumerate_graphs(m)
    items = [(m, a, b) for a, b in stream.work_items(CHUNK_SIZE)]
    parts = run_work_items(_duality_chunk, items, jobs, desc="duality")
    report = _merge_all(parts, OracleReport("duality", m))
    if m == 5:
        _realizability_equivalence(m, report)
    return _finish(report, start_time)


# scaling -------------------------------------------------------------------


def measure_recognition_scaling(sizes=(50, 100, 200), samples=3, seed=1):
    """Fit log t = a + b log n for reconstruct_from_table on promise-class
    graphs. Table building is not timed. An exponent b outside [3, 5] is a
    violation."""
    sizes = sorted(set(int(s) for s in sizes))
    if len(sizes) < 2:
        raise ValueError(f"sizes ({sizes}) must hold two distinct values.")
    if sizes[0] < 5 or sizes[-1] > MAX_SAMPLED_N:
        raise ValueError(f"sizes ({sizes}) must lie in 5..{MAX_SAMPLED_N}.")
    if samples < 1:
        raise ValueError(f"samples ({samples}) must be at least 1.")
    start_time = time.perf_counter()
    report = OracleReport("complexity", sizes[-1])
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    seconds = []
    for n, child in zip(sizes, children):
        timings = []
        for graph in PromiseClassSampler(n, samples, seed=child):
            table = builders.tri_connectivity_table(
                builders.cut_complex(graph, 3)
            )
            tic = time.perf_counter()
            rebuilt = recognition.reconstruct_from_table(table)
            timings.append(time.perf_counter() - tic)
            report.checked += 1
            if rebuilt != graph:
                report.violations.append(
                    {"n": n, "problem": "reconstruction differs from input"}
                )
        seconds.append(float(np.median(timings)))
        logger.info(
            "n=%d: median %.3fs over %d graphs", n, seconds[-1], samples
        )
    fit = stats.linregress(np.log(sizes), np.log(seconds))
    report.extras.update(
        {
            "sizes": sizes,
            "seconds": seconds,
            "exponent": float(fit.slope),
            "intercept": float(fit.intercept),
            "r_value": float(fit.rvalue),
        }
    )
    if not 3.0 <= fit.slope <= 5.0:
        report.violations.append({"exponent": float(fit.slope)})
    return _finish(report, start_time)
