import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph, square_graph, weighted_ring
from relcentral.errors import (
    PathExplosionError,
    UnknownVertexError,
    UnreachableVertexError,
)
from relcentral.graph import build_graph
from relcentral.paths import (
    TIE_TOL,
    distance,
    distances_tied,
    enumerate_shortest_paths,
    sssp,
)


def test_bfs_distances_on_square():
    dag = sssp(square_graph(), "A")
    np.testing.assert_array_equal(dag.dist, [0.0, 1.0, 2.0, 1.0])
    assert dag.sigma == (1, 1, 2, 1)


def test_dijkstra_distances_on_weighted_ring():
    dag = sssp(weighted_ring(), "A")
    np.testing.assert_allclose(dag.dist, [0.0, 0.5, 1.5, 1.0])
    assert dag.sigma == (1, 1, 1, 1)


def test_settle_order_is_nondecreasing_distance():
    g = weighted_ring()
    dag = sssp(g, "B")
    dists = [dag.dist[v] for v in dag.settle_order]
    assert dists == sorted(dists)
    assert dag.settle_order[0] == g.index_of("B")


def test_preds_and_sigma_consistency():
    g = build_graph([("s", "a"), ("s", "b"), ("a", "t"), ("b", "t")])
    dag = sssp(g, "s")
    t = g.index_of("t")
    assert dag.sigma[t] == 2
    assert sorted(dag.preds[t]) == [g.index_of("a"), g.index_of("b")]
    a = g.index_of("a")
    assert dag.pred_edges[a] == (g.edge_id(g.index_of("s"), a),)


def test_float_tie_within_tolerance_counts_both_paths():
    # 0.1 + 0.2 lands a hair above 0.3; the tolerance must absorb it
    g = build_graph([("A", "B", 0.1), ("B", "C", 0.2), ("A", "C", 0.3)])
    dag = sssp(g, "A")
    assert dag.sigma[g.index_of("C")] == 2
    assert distances_tied(0.1 + 0.2, 0.3)
    assert not distances_tied(0.3 + 2e-12 * 10, 0.3)


def test_tie_tolerance_is_relative():
    big = 1e6
    assert distances_tied(big, big * (1 + 1e-13))
    assert not distances_tied(1.0, 1.0 + 1e-9)
    assert TIE_TOL == 1e-12


def test_source_accepts_label_or_index():
    g = square_graph()
    assert sssp(g, "C").source == sssp(g, 2).source == 2
    with pytest.raises(UnknownVertexError):
        sssp(g, "nope")
    with pytest.raises(UnknownVertexError):
        sssp(g, 9)


def test_unreachable_vertices_have_infinite_distance():
    g = build_graph([("a", "b"), ("c", "d")])
    dag = sssp(g, "a")
    assert math.isinf(dag.dist[g.index_of("c")])
    assert dag.sigma[g.index_of("c")] == 0


def test_enumerate_diamond_paths_sorted():
    g = build_graph([("s", "a"), ("s", "b"), ("a", "t"), ("b", "t")])
    dag = sssp(g, "s")
    paths = enumerate_shortest_paths(dag, g.index_of("t"))
    si, ai, bi, ti = (g.index_of(x) for x in "sabt")
    assert paths == sorted([(si, ai, ti), (si, bi, ti)])


def test_enumerate_source_itself():
    g = square_graph()
    dag = sssp(g, "A")
    assert enumerate_shortest_paths(dag, 0) == [(0,)]


def test_enumerate_unreachable_raises():
    g = build_graph([("a", "b"), ("c", "d")])
    dag = sssp(g, "a")
    with pytest.raises(UnreachableVertexError):
        enumerate_shortest_paths(dag, g.index_of("d"))


def test_enumerate_respects_cap():
    # stacked diamonds double sigma at every layer
    records = []
    for k in range(12):
        records += [
            (f"m{k}", f"u{k}"), (f"m{k}", f"l{k}"),
            (f"u{k}", f"m{k + 1}"), (f"l{k}", f"m{k + 1}"),
        ]
    g = build_graph(records)
    dag = sssp(g, "m0")
    t = g.index_of("m12")
    with pytest.raises(PathExplosionError):
        enumerate_shortest_paths(dag, t, cap=1000)
    assert len(enumerate_shortest_paths(dag, t, cap=5000)) == 4096


def test_distance_helper():
    g = weighted_ring()
    assert distance(g, "A", "C") == pytest.approx(1.5)
    assert distance(g, "A", "A") == 0.0
    g2 = build_graph([("a", "b"), ("c", "d")])
    assert math.isinf(distance(g2, "a", "c"))


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10_000), weighted=st.booleans())
def test_enumerated_paths_are_valid_shortest_paths(seed, weighted):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, int(rng.integers(3, 9)), weighted)
    dag = sssp(g, 0)
    wt = {}
    for e in g.edges:
        wt[(e.u, e.v)] = wt[(e.v, e.u)] = e.weight
    for t in range(g.vertex_count):
        if t == dag.source:
            continue
        paths = enumerate_shortest_paths(dag, t)
        assert len(paths) == dag.sigma[t]
        assert len(set(paths)) == len(paths)
        for p in paths:
            assert p[0] == dag.source and p[-1] == t
            total = sum(wt[(p[i], p[i + 1])] for i in range(len(p) - 1))
            assert distances_tied(total, dag.dist[t])
