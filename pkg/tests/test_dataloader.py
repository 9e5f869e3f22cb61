import pytest

from cutcomplex.complexes.structure import is_promise_class
from graph_dataloader import LabeledGraphStream, PromiseClassSampler
from graph_dataloader import RandomGraphSampler, edge_slots
from graph_dataloader import enumerate_graphs, graph_from_mask


@pytest.mark.parametrize("n, size", [(3, 8), (5, 1024), (6, 32768)])
def test_stream_sizes(n, size):
    assert len(LabeledGraphStream(n)) == size


def test_stream_limits():
    with pytest.raises(ValueError, match="allow_large"):
        LabeledGraphStream(7)
    assert len(LabeledGraphStream(7, allow_large=True)) == 1 << 21
    with pytest.raises(ValueError, match="sampling"):
        LabeledGraphStream(8, allow_large=True)


def test_stream_lists_every_graph_once():
    stream = enumerate_graphs(4)
    graphs = list(stream)
    assert len(set(graphs)) == len(graphs) == 64
    assert stream[0].num_edges == 0
    assert stream[63].num_edges == 6
    assert [g.edge_mask() for g in graphs] == list(range(64))


def test_work_items_cover_the_stream():
    stream = LabeledGraphStream(5)
    items = stream.work_items(300)
    assert items[0] == (0, 300)
    assert items[-1] == (900, 1024)
    assert sum(stop - start for start, stop in items) == 1024
    ranged = list(stream.iter_range(*items[1]))
    assert ranged == [stream[i] for i in range(300, 600)]
    with pytest.raises(ValueError):
        stream.work_items(0)


def test_graph_from_mask():
    assert edge_slots(3) == [(1, 2), (1, 3), (2, 3)]
    assert graph_from_mask(3, 0b101).edges() == [(1, 2), (2, 3)]
    with pytest.raises(ValueError):
        graph_from_mask(3, 8)
    with pytest.raises(ValueError):
        graph_from_mask(3, -1)


def test_sampler_is_deterministic():
    first = list(RandomGraphSampler(6, 20, seed=5))
    assert first == list(RandomGraphSampler(6, 20, seed=5))
    assert first != list(RandomGraphSampler(6, 20, seed=6))


def test_split_depends_only_on_seed_and_sizes():
    sampler = RandomGraphSampler(6, 25, seed=3, p=0.3)
    chunks = sampler.split(10)
    assert [len(c) for c in chunks] == [10, 10, 5]
    assert all(c.p == 0.3 for c in chunks)
    again = [list(c) for c in sampler.split(10)]
    assert [list(c) for c in chunks] == again


def test_sampler_rejects_bad_parameters():
    with pytest.raises(ValueError):
        RandomGraphSampler(5, 10, p=1.5)
    with pytest.raises(ValueError):
        RandomGraphSampler(5, -1)
    with pytest.raises(ValueError):
        PromiseClassSampler(4, 10)


def test_promise_class_sampler_yields_promise_graphs():
    graphs = list(PromiseClassSampler(7, 10, seed=2))
    assert len(graphs) == 10
    assert all(is_promise_class(g) for g in graphs)


def test_promise_class_sampler_gives_up():
    # G(n, 0) is edgeless: every pair of vertices are twins.
    sampler = PromiseClassSampler(6, 1, p=0.0, max_tries=3)
    with pytest.raises(RuntimeError, match="3 draws"):
        list(sampler)
