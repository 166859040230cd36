import numpy as np

from graphvc.bounds import degree_filter
from graphvc.reducer import reduce_graph, trace_classes

from conftest import complete, random_family, star


def traces_on(g, high, vertices):
    high = set(high)
    return {frozenset(g.closed_neighborhood(v) & high) for v in vertices}


def test_full_high_set_keeps_everything():
    g = random_family(40)[-1]
    red = reduce_graph(g, range(g.n))
    assert red.kept.tolist() == list(range(g.n))
    assert red.graph.edges().tolist() == g.edges().tolist()


def test_star_center_absorbs_leaves():
    g = star(3)
    red = reduce_graph(g, [0])
    assert red.kept.tolist() == [0]
    assert traces_on(g, [0], range(g.n)) == {frozenset({0})}


def test_star_leaf_as_high_set():
    # classes on H={1}: {0,1} see 1, {2,3} do not; 2 represents the latter
    red = reduce_graph(star(3), [1])
    assert red.kept.tolist() == [1, 2]
    assert red.graph.edge_count == 0


def test_unpacks_like_a_tuple():
    graph, id_map, kept = reduce_graph(complete(3), [0])
    assert kept.tolist() == [0] and id_map == {0: 0} and graph.n == 1


def test_trace_set_preserved_exhaustively():
    rng = np.random.default_rng(4)
    for g in random_family(200):
        for _ in range(3):
            high = np.flatnonzero(rng.random(g.n) < 0.4)
            red = reduce_graph(g, high)
            kept = red.kept.tolist()
            assert set(high.tolist()) <= set(kept)
            assert traces_on(g, high, range(g.n)) == traces_on(g, high, kept)
            # traces in the reduced graph itself, mapped back to old ids
            sub = red.graph
            new_high = [red.id_map[h] for h in high.tolist()]
            reduced = {frozenset(int(red.kept[w]) for w in t)
                       for t in traces_on(sub, new_high, range(sub.n))}
            assert reduced == traces_on(g, high, range(g.n))
            # at most one kept vertex outside H per trace
            outside = [v for v in kept if v not in set(high.tolist())]
            assert len(traces_on(g, high, outside)) == len(outside)


def test_partition_classes_match_traces():
    for g in random_family(120):
        high = degree_filter(g, 1)
        part, n_parts, _ = trace_classes(g, high)
        h = set(high.tolist())
        by_trace = {}
        for v in range(g.n):
            by_trace.setdefault(frozenset(g.closed_neighborhood(v) & h), set()).add(int(part[v]))
        assert all(len(ids) == 1 for ids in by_trace.values())
        assert len(by_trace) == n_parts


def test_representatives_are_lowest_ids_and_deterministic():
    for g in random_family(80):
        high = degree_filter(g, 2)
        a, b = reduce_graph(g, high), reduce_graph(g, high)
        assert a.kept.tolist() == b.kept.tolist()
        h = set(high.tolist())
        for v in a.kept.tolist():
            if v in h:
                continue
            trace = g.closed_neighborhood(v) & h
            assert all(u >= v for u in range(g.n) if g.closed_neighborhood(u) & h == trace)


def test_refinement_work_is_linear():
    for g in random_family(120):
        high = degree_filter(g, 1)
        red = reduce_graph(g, high)
        assert red.work <= 2 * int(g.closed_degrees()[high].sum())
