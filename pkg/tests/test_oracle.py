import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ALL_FS, random_graph, square_graph, weighted_ring
from relcentral.errors import TooLargeError
from relcentral.graph import build_graph
from relcentral.oracle import (
    OracleLimits,
    all_pairs_shortest_paths,
    brute_betweenness,
    brute_degree,
    brute_harmonic,
    brute_shortest_paths,
)
from relcentral.paths import enumerate_shortest_paths, sssp
from relcentral.relevance import PRODUCT, RelevanceVector


def test_brute_paths_on_square():
    g = square_graph()
    d, paths = brute_shortest_paths(g, "A", "C")
    assert d == 2.0
    assert paths == [(0, 1, 2), (0, 3, 2)]


def test_brute_paths_weighted_prefers_total_weight():
    g = weighted_ring()
    d, paths = brute_shortest_paths(g, "A", "C")
    assert d == pytest.approx(1.5)
    assert paths == [(0, 1, 2)]


def test_brute_paths_source_equals_target():
    g = square_graph()
    d, paths = brute_shortest_paths(g, "B", "B")
    assert d == 0.0 and paths == [(1,)]


def test_brute_paths_unreachable():
    g = build_graph([("a", "b"), ("c", "d")])
    d, paths = brute_shortest_paths(g, "a", "c")
    assert math.isinf(d) and paths == []


def test_vertex_limit_enforced():
    g = build_graph([(f"v{i}", f"v{i + 1}") for i in range(13)])
    with pytest.raises(TooLargeError):
        brute_shortest_paths(g, "v0", "v13")
    small = OracleLimits(max_vertices=5)
    with pytest.raises(TooLargeError):
        brute_shortest_paths(square_graph(), "A", "C", OracleLimits(max_vertices=3))
    assert brute_shortest_paths(square_graph(), "A", "C", small)[0] == 2.0


def test_path_budget_enforced():
    records = []
    for k in range(9):
        records += [
            (f"m{k}", f"u{k}"), (f"m{k}", f"l{k}"),
            (f"u{k}", f"m{k + 1}"), (f"l{k}", f"m{k + 1}"),
        ]
    g = build_graph(records)
    assert g.vertex_count == 28
    limits = OracleLimits(max_vertices=100, max_paths=100)
    with pytest.raises(TooLargeError):
        brute_shortest_paths(g, "m0", "m9", limits)


def test_all_pairs_covers_both_directions():
    g = weighted_ring()
    ap = all_pairs_shortest_paths(g)
    assert len(ap) == 4 * 3
    d_ab, p_ab = ap[(0, 2)]
    d_ba, p_ba = ap[(2, 0)]
    assert d_ab == d_ba
    assert p_ba == sorted(tuple(reversed(q)) for q in p_ab)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10_000), weighted=st.booleans())
def test_brute_paths_agree_with_dag_enumeration(seed, weighted):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, int(rng.integers(3, 9)), weighted)
    for s in range(g.vertex_count):
        dag = sssp(g, s)
        for t in range(g.vertex_count):
            if s == t:
                continue
            d, paths = brute_shortest_paths(g, s, t)
            if math.isinf(d):
                assert dag.sigma[t] == 0
                continue
            assert d == pytest.approx(dag.dist[t], abs=1e-12)
            assert paths == enumerate_shortest_paths(dag, t)


def test_brute_degree_classic_and_weighted_by_relevance():
    g = square_graph()
    R1 = RelevanceVector.ones(4)
    np.testing.assert_allclose(brute_degree(g, R1, PRODUCT), [2, 2, 2, 2])
    R = RelevanceVector(np.array([2.0, 1.0, 1.0, 1.0]))
    np.testing.assert_allclose(brute_degree(g, R, PRODUCT), [4, 3, 2, 3])


def test_brute_harmonic_path_graph():
    # a-b-c: C(a) = 1 + 1/2, C(b) = 2
    g = build_graph([("a", "b"), ("b", "c")])
    R = RelevanceVector.ones(3)
    np.testing.assert_allclose(brute_harmonic(g, R, PRODUCT), [1.5, 2.0, 1.5])


def test_brute_betweenness_path_graph():
    g = build_graph([("a", "b"), ("b", "c")])
    R = RelevanceVector.ones(3)
    vb, eb = brute_betweenness(g, R, PRODUCT)
    # both orders of the (a, c) pair pass through b
    np.testing.assert_allclose(vb, [0.0, 2.0, 0.0])
    # each edge carries its endpoint pairs (2) plus the long pair (2)
    np.testing.assert_allclose(eb, [4.0, 4.0])


def test_brute_betweenness_splits_tied_paths():
    g = build_graph([("s", "a"), ("s", "b"), ("a", "t"), ("b", "t")])
    R = RelevanceVector.ones(4)
    vb, _ = brute_betweenness(g, R, PRODUCT)
    assert vb[g.index_of("a")] == pytest.approx(1.0)
    assert vb[g.index_of("b")] == pytest.approx(1.0)


def test_brute_metrics_accept_all_f_forms():
    g = weighted_ring()
    rng = np.random.default_rng(0)
    R = RelevanceVector(rng.uniform(0.5, 2.0, size=4))
    for f in ALL_FS:
        assert brute_harmonic(g, R, f).shape == (4,)
        vb, eb = brute_betweenness(g, R, f)
        assert vb.shape == (4,) and eb.shape == (g.edge_count,)
