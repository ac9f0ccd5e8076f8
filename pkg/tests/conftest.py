"""Shared helpers for unit and acceptance tests."""

from __future__ import annotations

import numpy as np

from relcentral.graph import Graph, build_graph
from relcentral.relevance import (
    MAX,
    MEAN,
    PATH_PROD,
    PATH_SUM,
    PRODUCT,
    SOURCE_ONLY,
    RelevanceFunction,
    RelevanceVector,
    matrix_function,
)

PAIRWISE_FS = (PRODUCT, MEAN, SOURCE_ONLY, MAX)
PATH_FS = (PATH_SUM, PATH_PROD)
ALL_FS = PAIRWISE_FS + PATH_FS


def square_graph() -> Graph:
    # 4-cycle A-B-C-D-A, unweighted
    return build_graph([("A", "B"), ("B", "C"), ("C", "D"), ("A", "D")])


def weighted_ring() -> Graph:
    # same cycle with one short edge, so A-B-C beats A-D-C
    return build_graph(
        [("A", "B", 0.5), ("B", "C", 1.0), ("C", "D", 1.0), ("A", "D", 1.0)]
    )


def random_graph(rng: np.random.Generator, n: int, weighted: bool) -> Graph:
    """Connected-by-construction random graph: spanning tree plus extras."""
    def w() -> float:
        return round(float(rng.choice([0.5, 1.0, 1.0, 1.5, 2.0, 3.0])), 6)

    labels = [f"n{i}" for i in range(n)]
    edges = set()
    for i in range(1, n):
        edges.add((int(rng.integers(0, i)), i))
    extra = int(rng.integers(0, n))
    for _ in range(extra):
        a, b = int(rng.integers(0, n)), int(rng.integers(0, n))
        if a == b:
            continue
        edges.add((min(a, b), max(a, b)))
    records = [
        (labels[a], labels[b], w()) if weighted else (labels[a], labels[b])
        for a, b in sorted(edges)
    ]
    return build_graph(records)


def random_relevance(rng: np.random.Generator, n: int) -> RelevanceVector:
    return RelevanceVector(np.round(rng.uniform(0.5, 4.0, size=n), 6))


def random_matrix_f(rng: np.random.Generator, n: int) -> RelevanceFunction:
    F = np.round(rng.uniform(0.1, 3.0, size=(n, n)), 6)
    np.fill_diagonal(F, 0.0)
    return matrix_function(F)
