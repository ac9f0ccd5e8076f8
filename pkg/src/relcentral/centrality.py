"""Degree, harmonic closeness, and vertex/edge betweenness.

All metrics come in one flavor that covers both worlds: pass a uniform
relevance vector to get the classic definition, a non-trivial one to
get the relevance-weighted extension. Sums run over ordered vertex
pairs, so both (s,t) and (t,s) contribute; vertex betweenness credits
interior vertices only, edge betweenness credits every edge of a path
including the ones touching its endpoints.

Unweighted graphs go through the vectorized lockstep engine in
``_batched``; weighted graphs take a per-source scalar pass over the
Dijkstra DAG with exact integer path counts. Per-source partials are
always merged in ascending order, so results do not depend on the
worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    LengthMismatchError,
    PathVariantNotApplicableError,
    SigmaOverflowError,
)
from .graph import Graph
from .paths import sssp
from .relevance import (
    PRODUCT,
    RelevanceFunction,
    RelevanceVector,
    Variant,
    pair_values_for_source,
)

__all__ = [
    "Metric",
    "CentralityReport",
    "degree_centrality",
    "harmonic_centrality",
    "vertex_betweenness",
    "edge_betweenness",
    "betweenness_reports",
    "rank",
]

_SCALAR_CHUNK = 64


class Metric(str, Enum):
    DEGREE = "degree"
    HARMONIC = "harmonic"
    VERTEX_BETWEENNESS = "betweenness"
    EDGE_BETWEENNESS = "edge-betweenness"


@dataclass(frozen=True)
class CentralityReport:
    """Per-element metric values plus the induced ranking.

    ``ids`` are vertex labels, or (label, label) pairs for edge
    metrics. ``ranking`` lists ids by descending value, ties broken by
    ascending internal index so repeated runs agree bit for bit.
    """

    metric: Metric
    kind: str  # "vertex" or "edge"
    ids: tuple
    values: np.ndarray
    ranking: tuple
    f_label: str
    relevance_source: str
    weighted: bool

    def as_dict(self) -> dict:
        return {i: float(v) for i, v in zip(self.ids, self.values)}

    def value_of(self, element) -> float:
        return self.as_dict()[element]


def rank(report: CentralityReport) -> list:
    """Element ids by descending value; ties go to the lower index."""
    return list(report.ranking)


def _make_report(
    metric: Metric,
    kind: str,
    ids: tuple,
    values: np.ndarray,
    f: RelevanceFunction,
    relevance_source: str,
    weighted: bool,
) -> CentralityReport:
    values = np.asarray(values, dtype=np.float64)
    if not np.all(np.isfinite(values)):
        raise SigmaOverflowError(
            f"{metric.value} accumulation overflowed to a non-finite value; "
            "the instance is beyond float64 range"
        )
    order = sorted(range(len(values)), key=lambda i: (-values[i], i))
    values = values.copy()
    values.setflags(write=False)
    return CentralityReport(
        metric=metric,
        kind=kind,
        ids=ids,
        values=values,
        ranking=tuple(ids[i] for i in order),
        f_label=f.label,
        relevance_source=relevance_source,
        weighted=weighted,
    )


def _resolve(g: Graph, R: RelevanceVector | None, relevance_source: str | None):
    if R is None:
        R = RelevanceVector.ones(g.vertex_count)
    if len(R) != g.vertex_count:
        raise LengthMismatchError(
            f"relevance has {len(R)} entries for a {g.vertex_count}-vertex graph"
        )
    if relevance_source is None:
        relevance_source = "uniform" if R.is_uniform() else "explicit"
    return R, relevance_source


def _edge_ids(g: Graph) -> tuple:
    return tuple((g.labels[e.u], g.labels[e.v]) for e in g.edges)


# --- degree ---


def degree_centrality(
    g: Graph,
    R: RelevanceVector | None = None,
    f: RelevanceFunction = PRODUCT,
    relevance_source: str | None = None,
) -> CentralityReport:
    """d(s) = sum of f(R_s, R_t) over neighbors t of s."""
    if f.variant.is_path:
        raise PathVariantNotApplicableError(
            f"{f.label} needs a path; degree only sees direct neighbors"
        )
    R, relevance_source = _resolve(g, R, relevance_source)
    vals = np.zeros(g.vertex_count)
    for s in range(g.vertex_count):
        nbrs = [t for t, _, _ in g.adjacency[s]]
        if nbrs:
            vals[s] = pair_values_for_source(f, s, R)[nbrs].sum()
    return _make_report(
        Metric.DEGREE, "vertex", g.labels, vals, f, relevance_source, g.weighted
    )


# --- scalar per-source passes (weighted graphs) ---


def _scalar_harmonic_source(g: Graph, R: RelevanceVector, f: RelevanceFunction, s: int) -> float:
    dag = sssp(g, s)
    d = dag.dist
    reach = [t for t in dag.settle_order if t != s]
    if not reach:
        return 0.0
    if f.variant.is_pairwise:
        fv = pair_values_for_source(f, s, R)
        return float(sum(fv[t] / d[t] for t in reach))
    fwd = _forward_path_values(g, R, f, dag)
    return float(sum(fwd[t] / dag.sigma[t] / d[t] for t in reach))


def _forward_path_values(g, R, f, dag) -> list[float]:
    """Per target t, the total path weight summed over all shortest s-t paths."""
    r = R.values
    out = [0.0] * g.vertex_count
    out[dag.source] = r[dag.source]
    if f.variant is Variant.PATH_PROD:
        for w in dag.settle_order[1:]:
            out[w] = r[w] * sum(out[p] for p in dag.preds[w])
    else:  # PATH_SUM; sum of pred sigmas is sigma[w]
        for w in dag.settle_order[1:]:
            out[w] = sum(out[p] for p in dag.preds[w]) + r[w] * dag.sigma[w]
    return out


def _scalar_betweenness_source(
    g: Graph, R: RelevanceVector, f: RelevanceFunction, s: int,
    vb: np.ndarray, eb: np.ndarray,
) -> None:
    """Accumulate one source's vertex and edge credit into vb/eb."""
    dag = sssp(g, s)
    sigma = dag.sigma
    n = g.vertex_count
    if f.variant.is_pairwise:
        fv = pair_values_for_source(f, s, R)
        delta = [0.0] * n
        for w in reversed(dag.settle_order):
            if w == s:
                continue
            gw = fv[w] + delta[w]
            sw = sigma[w]
            for p, ei in zip(dag.preds[w], dag.pred_edges[w]):
                c = (sigma[p] / sw) * gw  # exact big-int ratio, then scaled
                delta[p] += c
                eb[ei] += c
        for v in range(n):
            if v != s:
                vb[v] += delta[v]
        return

    r = R.values
    fwd = _forward_path_values(g, R, f, dag)
    if f.variant is Variant.PATH_PROD:
        # backward pass: K(w) sums suffix products / sigma_t over all
        # DAG suffixes starting at w; succ_sum collects K over successors.
        succ_sum = [0.0] * n
        for w in reversed(dag.settle_order):
            if w == s:
                continue
            kw = r[w] * (1.0 / sigma[w] + succ_sum[w])
            for p, ei in zip(dag.preds[w], dag.pred_edges[w]):
                succ_sum[p] += kw
                eb[ei] += fwd[p] * kw
        for v in range(n):
            if v != s:
                vb[v] += fwd[v] * succ_sum[v]
    else:
        # PATH_SUM needs two suffix aggregates: plain 1/sigma_t mass and
        # suffix-sum-of-R mass.
        cnt_sum = [0.0] * n
        sum_sum = [0.0] * n
        for w in reversed(dag.settle_order):
            if w == s:
                continue
            kc = 1.0 / sigma[w] + cnt_sum[w]
            ks = r[w] / sigma[w] + sum_sum[w] + r[w] * cnt_sum[w]
            for p, ei in zip(dag.preds[w], dag.pred_edges[w]):
                cnt_sum[p] += kc
                sum_sum[p] += ks
                eb[ei] += fwd[p] * kc + sigma[p] * ks
        for v in range(n):
            if v != s:
                vb[v] += fwd[v] * cnt_sum[v] + sigma[v] * sum_sum[v]


def _chunks(n: int, size: int) -> list[range]:
    return [range(i, min(i + size, n)) for i in range(0, n, size)]


def _scalar_betweenness(g, R, f, workers: int):
    n = g.vertex_count

    def run(chunk: range):
        vb = np.zeros(n)
        eb = np.zeros(g.edge_count)
        # float-range overflow lands as inf and trips the report's
        # finiteness check; big-int conversion failures surface here
        try:
            with np.errstate(over="ignore", invalid="ignore"):
                for s in chunk:
                    _scalar_betweenness_source(g, R, f, s, vb, eb)
        except OverflowError as exc:  # big-int sigma no longer fits a float
            raise SigmaOverflowError(str(exc)) from exc
        return vb, eb

    parts = _map_ordered(run, _chunks(n, _SCALAR_CHUNK), workers)
    vb = np.zeros(n)
    eb = np.zeros(g.edge_count)
    for pv, pe in parts:
        vb += pv
        eb += pe
    return vb, eb


def _scalar_harmonic(g, R, f, workers: int) -> np.ndarray:
    n = g.vertex_count

    def run(chunk: range):
        try:
            with np.errstate(over="ignore", invalid="ignore"):
                return [_scalar_harmonic_source(g, R, f, s) for s in chunk]
        except OverflowError as exc:
            raise SigmaOverflowError(str(exc)) from exc

    chunks = _chunks(n, _SCALAR_CHUNK)
    vals = np.zeros(n)
    for chunk, part in zip(chunks, _map_ordered(run, chunks, workers)):
        vals[list(chunk)] = part
    return vals


def _map_ordered(fn, jobs, workers: int) -> list:
    """Run jobs possibly in parallel, return results in job order."""
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))


# --- public metric entry points ---


def harmonic_centrality(
    g: Graph,
    R: RelevanceVector | None = None,
    f: RelevanceFunction = PRODUCT,
    workers: int = 1,
    relevance_source: str | None = None,
) -> CentralityReport:
    """C(s) = sum over reachable t of pair/path weight divided by distance.

    Unreachable targets contribute nothing, so the metric stays finite
    on disconnected graphs. For path variants the per-pair weight is
    the mean of the path weight over all tied shortest paths.
    """
    R, relevance_source = _resolve(g, R, relevance_source)
    if g.weighted:
        vals = _scalar_harmonic(g, R, f, workers)
    else:
        from ._batched import batched_harmonic

        vals = batched_harmonic(g, R, f, workers)
    return _make_report(
        Metric.HARMONIC, "vertex", g.labels, vals, f, relevance_source, g.weighted
    )


def _betweenness_values(g, R, f, workers: int):
    if g.weighted:
        return _scalar_betweenness(g, R, f, workers)
    from ._batched import batched_betweenness

    return batched_betweenness(g, R, f, workers)


def betweenness_reports(
    g: Graph,
    R: RelevanceVector | None = None,
    f: RelevanceFunction = PRODUCT,
    workers: int = 1,
    relevance_source: str | None = None,
) -> tuple[CentralityReport, CentralityReport]:
    """Vertex and edge betweenness from a single sweep."""
    R, relevance_source = _resolve(g, R, relevance_source)
    vb, eb = _betweenness_values(g, R, f, workers)
    vrep = _make_report(
        Metric.VERTEX_BETWEENNESS, "vertex", g.labels, vb, f, relevance_source, g.weighted
    )
    erep = _make_report(
        Metric.EDGE_BETWEENNESS, "edge", _edge_ids(g), eb, f, relevance_source, g.weighted
    )
    return vrep, erep


def vertex_betweenness(
    g: Graph,
    R: RelevanceVector | None = None,
    f: RelevanceFunction = PRODUCT,
    workers: int = 1,
    relevance_source: str | None = None,
) -> CentralityReport:
    return betweenness_reports(g, R, f, workers, relevance_source)[0]


def edge_betweenness(
    g: Graph,
    R: RelevanceVector | None = None,
    f: RelevanceFunction = PRODUCT,
    workers: int = 1,
    relevance_source: str | None = None,
) -> CentralityReport:
    return betweenness_reports(g, R, f, workers, relevance_source)[1]
