"""Streams and samplers of labeled graphs for the oracle sweeps."""
import math

import numpy as np

from cutcomplex.complexes.model import Graph, subset_index
from cutcomplex.complexes.shared_definition import FULL_ENUMERATION_LIMIT
from cutcomplex.complexes.shared_definition import LARGE_ENUMERATION_LIMIT
from cutcomplex.complexes.structure import is_promise_class


def edge_slots(n):
    """Vertex pairs (u, v), u < v, in lexicographic order."""
    return [(int(a) + 1, int(b) + 1) for a, b in subset_index(n, 2)]


def graph_from_mask(n, mask):
    """Graph whose edges are the slots i with bit i of mask set."""
    slots = subset_index(n, 2)
    if not 0 <= mask < 1 << len(slots):
        raise ValueError(
            f"mask ({mask}) must lie in 0..2^{len(slots)} - 1 for n = {n}."
        )
    bits = np.array([(mask >> i) & 1 for i in range(len(slots))], dtype=bool)
    return _graph_from_bits(n, slots, bits)


def _graph_from_bits(n, slots, bits):
    adj = np.zeros((n, n), dtype=bool)
    adj[slots[bits, 0], slots[bits, 1]] = True
    adj |= adj.T
    return Graph._from_trusted(n, adj)


class LabeledGraphStream(object):
    """Every labeled graph on 1..n exactly once, in edge-mask order."""

    def __init__(self, n, allow_large=False):
        """
        Args:
          n: int, number of vertices.
          allow_large: bool, permit the 2^21 graphs on 7 vertices.
        """
        if n < 1:
            raise ValueError(f"n ({n}) must be at least 1.")
        if n > LARGE_ENUMERATION_LIMIT:
            raise ValueError(
                f"n ({n}) is too large for full enumeration; the limit is "
                f"{LARGE_ENUMERATION_LIMIT}, use sampling instead."
            )
        if n > FULL_ENUMERATION_LIMIT and not allow_large:
            raise ValueError(
                f"full enumeration at n = {n} needs allow_large (--full)."
            )
        self.n = n
        self.slots = subset_index(n, 2)
        self.n_slots = len(self.slots)

    def __len__(self):
        return 1 << self.n_slots

    def __getitem__(self, idx):
        if not 0 <= idx < len(self):
            raise IndexError(f"graph index {idx} out of range.")
        return graph_from_mask(self.n, idx)

    def __iter__(self):
        return self.iter_range(0, len(self))

    def iter_range(self, start, stop):
        """Graphs with masks start..stop - 1."""
        shifts = np.arange(self.n_slots, dtype=np.int64)
        for mask in range(start, stop):
            bits = ((mask >> shifts) & 1).astype(bool)
            yield _graph_from_bits(self.n, self.slots, bits)

    def work_items(self, chunk_size):
        """Disjoint (start, stop) mask ranges covering the stream."""
        if chunk_size < 1:
            raise ValueError(f"chunk_size ({chunk_size}) must be positive.")
        total = len(self)
        return [
            (start, min(start + chunk_size, total))
            for start in range(0, total, chunk_size)
        ]


def enumerate_graphs(n, allow_large=False):
    return LabeledGraphStream(n, allow_large=allow_large)


class GraphSamplerBase(object):
    """Sampler base: a fixed number of graphs from a seeded generator."""

    def __init__(self, n, n_samples, seed=1):
        if n < 1:
            raise ValueError(f"n ({n}) must be at least 1.")
        if n_samples < 0:
            raise ValueError(f"n_samples ({n_samples}) must be non-negative.")
        self.n = n
        self.n_samples = n_samples
        self.seed = seed

    def _params(self):
        return {}

    def split(self, chunk_size):
        """Independent samplers of at most chunk_size graphs each.

        Child seeds are spawned from the parent seed, so the chunks depend
        only on (seed, n_samples, chunk_size).
        """
        if chunk_size < 1:
            raise ValueError(f"chunk_size ({chunk_size}) must be positive.")
        n_chunks = max(1, math.ceil(self.n_samples / chunk_size))
        seq = self.seed
        if not isinstance(seq, np.random.SeedSequence):
            seq = np.random.SeedSequence(seq)
        children = seq.spawn(n_chunks)
        sizes = [
            min(chunk_size, self.n_samples - i * chunk_size)
            for i in range(n_chunks)
        ]
        return [
            type(self)(self.n, max(size, 0), seed=child, **self._params())
            for size, child in zip(sizes, children)
        ]

    def __iter__(self):
        raise NotImplementedError

    def __len__(self):
        return self.n_samples


class RandomGraphSampler(GraphSamplerBase):
    """Erdos-Renyi samples G(n, p)."""

    def __init__(self, n, n_samples, seed=1, p=0.5):
        super(RandomGraphSampler, self).__init__(n, n_samples, seed)
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"p ({p}) must lie in [0, 1].")
        self.p = p

    def _params(self):
        return {"p": self.p}

    def draw(self, rng):
        slots = subset_index(self.n, 2)
        return _graph_from_bits(self.n, slots, rng.random(len(slots)) < self.p)

    def __iter__(self):
        rng = np.random.default_rng(self.seed)
        for _ in range(self.n_samples):
            yield self.draw(rng)


class PromiseClassSampler(RandomGraphSampler):
    """G(n, p) samples rejected until twin-free and outside the P4 family."""

    def __init__(self, n, n_samples, seed=1, p=0.5, max_tries=10000):
        if n < 5:
            raise ValueError(f"n ({n}) must be at least 5.")
        super(PromiseClassSampler, self).__init__(n, n_samples, seed, p)
        self.max_tries = max_tries

    def _params(self):
        return {"p": self.p, "max_tries": self.max_tries}

    def __iter__(self):
        rng = np.random.default_rng(self.seed)
        for _ in range(self.n_samples):
            for _ in range(self.max_tries):
                graph = self.draw(rng)
                if is_promise_class(graph):
                    break
            else:
                raise RuntimeError(
                    f"no promise-class graph in {self.max_tries} draws "
                    f"(n = {self.n}, p = {self.p})."
                )
            yield graph
