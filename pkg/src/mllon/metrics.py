"""Descriptive, global and local metrics of weighted local optima networks.

Every function takes a :class:`~mllon.graph.WeightedDigraph`, so the same code
serves single-layer LONs and flattened multi-layer networks.  Correlations that
are undefined (fewer than two points, or a constant variable) are returned as
``None`` rather than 0.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import dijkstra

from . import _kernels
from .graph import WeightedDigraph


SPREAD_EPS = 1e-12


class InvalidWeightError(ValueError):
    """An edge weight outside ``[0, 1]`` where a probability is required."""


@dataclass
class MetricsReport:
    nv: int
    ne: int
    knn: float | None
    fnn: float | None
    wcc_mean: float
    wcc_rand: float | None
    l_mean: float | None
    l_reach: float
    st_mean: float | None
    y2_mean: float | None
    zout_mean: float | None
    l_go_mean: float | None
    l_go_reach: float

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def columns(cls) -> list[str]:
        return [f.name for f in fields(cls)]


@dataclass
class PointCloud:
    x: np.ndarray
    y: np.ndarray
    xlabel: str
    ylabel: str

    def __len__(self):
        return len(self.x)

    def pearson(self) -> float | None:
        return pearson(self.x, self.y)


def pearson(x, y) -> float | None:
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if len(x) < 2 or not (np.isfinite(x).all() and np.isfinite(y).all()):
        return None
    if _constant(x) or _constant(y):
        return None
    dx = x - x.mean()
    dy = y - y.mean()
    r = float(dx @ dy / math.sqrt(float(dx @ dx) * float(dy @ dy)))
    return min(1.0, max(-1.0, r))


def _constant(v: np.ndarray) -> bool:
    # spreads at rounding level come from summation order, not from the data
    return float(np.ptp(v)) <= SPREAD_EPS * max(1.0, float(np.abs(v).max()))


def _neighbour_average(g: WeightedDigraph, values: np.ndarray, st: np.ndarray) -> np.ndarray:
    """``sum_j w_ij * values_j / st_i`` for every node (NaN where ``st_i == 0``)."""
    acc = np.bincount(g.src, weights=g.weight * values[g.dst], minlength=g.nv).astype(np.float64)
    with np.errstate(invalid="ignore", divide="ignore"):
        return acc / st


def descriptive_stats(g: WeightedDigraph):
    """``(nv, ne, knn, fnn)``.

    ``knn`` correlates each node's out-strength with the transition-weighted
    mean out-strength of its successors; ``fnn`` does the same for fitness.
    Nodes with zero out-strength take part in neither correlation.
    """
    if g.nv == 0:
        raise ValueError("metrics need a non-empty graph")
    st = g.out_strength()
    live = st > 0
    knn = pearson(st[live], _neighbour_average(g, st, st)[live])
    fnn = pearson(g.fitness[live], _neighbour_average(g, g.fitness, st)[live])
    return g.nv, g.ne, knn, fnn


def symmetrized(g: WeightedDigraph) -> sp.csr_matrix:
    """Undirected view: ``w'_ij = (w_ij + w_ji) / 2``, self-loops and zero weights dropped."""
    w = g.csr
    sym = ((w + w.T) * 0.5).tocsr()
    sym.setdiag(0)
    sym.eliminate_zeros()
    sym.sort_indices()
    return sym


def clustering_coefficients(g: WeightedDigraph) -> np.ndarray:
    """Barrat weighted clustering coefficient of every node on the symmetrized graph."""
    sym = symmetrized(g)
    k = np.diff(sym.indptr)
    s = np.asarray(sym.sum(axis=1)).ravel()
    num = _kernels.barrat_numerators(
        sym.indptr.astype(np.int64), sym.indices.astype(np.int64), sym.data, g.nv
    )
    c = np.zeros(g.nv)
    ok = k >= 2
    c[ok] = num[ok] / (s[ok] * (k[ok] - 1))
    return c


def weighted_clustering(g: WeightedDigraph) -> float:
    return float(clustering_coefficients(g).mean()) if g.nv else 0.0


def random_clustering_baseline(nv: int, mean_degree: float) -> float:
    """Expected clustering of an Erdos-Renyi graph with the same size and mean degree."""
    if nv < 2:
        raise ValueError("the random baseline needs at least two nodes")
    return min(1.0, max(0.0, mean_degree / (nv - 1)))


def shortest_path_stats(g: WeightedDigraph, words: int = 8):
    """Mean hop distance over ordered reachable pairs, and the reachable fraction.

    Returns ``(None, 0.0)`` when no pair is connected.
    """
    nv = g.nv
    if nv < 2:
        return None, 0.0
    adj = g.csr
    indptr = adj.indptr.astype(np.int64)
    indices = adj.indices.astype(np.int64)
    block = 64 * words
    total = pairs = 0
    for first in range(0, nv, block):
        count = min(block, nv - first)
        t, p = _kernels.bfs_block(indptr, indices, nv, first, count, (count + 63) // 64)
        total += int(t)
        pairs += int(p)
    frac = pairs / (nv * (nv - 1))
    return (total / pairs if pairs else None), frac


def path_to_global_optima(g: WeightedDigraph, go_nodes=None):
    """Mean length of the shortest path to the nearest global optimum.

    Edge lengths are ``1 - w_ij``, so certain transitions are free.  The mean
    runs over the nodes that can reach a global optimum (global optima count
    with length 0); the second value is the fraction of such nodes.
    """
    if go_nodes is None:
        go_nodes = np.flatnonzero(g.is_global)
    go_nodes = np.asarray(go_nodes, dtype=np.int64)
    if len(go_nodes) == 0:
        raise ValueError("no global optimum nodes given")
    if g.ne and (g.weight.max() > 1.0 or g.weight.min() < 0.0):
        raise InvalidWeightError("edge weights must lie in [0, 1] to derive lengths 1 - w")
    # distances *to* the targets = distances from them on the reversed graph
    rev = sp.csr_matrix((1.0 - g.weight, (g.dst, g.src)), shape=(g.nv, g.nv))
    dist = dijkstra(rev, directed=True, indices=go_nodes, min_only=True)
    dist[go_nodes] = 0.0
    reach = np.isfinite(dist)
    return float(dist[reach].mean()), float(reach.mean())


def node_disparity(g: WeightedDigraph) -> np.ndarray:
    """``y2_i = sum_j (w_ij / st_i)**2``; NaN for nodes without outgoing weight."""
    st = g.out_strength()
    with np.errstate(invalid="ignore", divide="ignore"):
        share = g.weight / st[g.src]
    y2 = np.bincount(g.src, weights=share * share, minlength=g.nv).astype(np.float64)
    y2[st <= 0] = np.nan
    return y2


def strength_disparity_degree(g: WeightedDigraph):
    """Means of out-strength, disparity and out-degree over nodes with an out-edge."""
    zout = g.out_degree()
    has = zout >= 1
    if not has.any():
        return None, None, None
    st = g.out_strength()
    y2 = node_disparity(g)[has]
    y2 = y2[np.isfinite(y2)]
    return float(st[has].mean()), (float(y2.mean()) if len(y2) else None), float(zout[has].mean())


def local_point_clouds(g: WeightedDigraph):
    """Cumulative strength distribution and the strength/fitness vs basin size clouds."""
    if np.isnan(g.fitness).any() or (g.basin_size < 1).any():
        raise ValueError("nodes lack fitness or basin-size attributes")
    st = g.out_strength()
    values = np.unique(st)
    at_least = (len(st) - np.searchsorted(np.sort(st), values, side="left")) / len(st)
    size = g.basin_size.astype(np.float64)
    return (
        PointCloud(values, at_least, "strength", "P(st>=c)"),
        PointCloud(st, size, "strength", "basin_size"),
        PointCloud(g.fitness.copy(), size, "fitness", "basin_size"),
    )


def compute_metrics(g: WeightedDigraph, words: int = 8) -> MetricsReport:
    nv, ne, knn, fnn = descriptive_stats(g)
    wcc = weighted_clustering(g)
    wcc_r = random_clustering_baseline(nv, 2.0 * ne / nv) if nv >= 2 else None
    l_mean, l_reach = shortest_path_stats(g, words=words)
    st, y2, zout = strength_disparity_degree(g)
    if g.is_global.any():
        l_go, go_reach = path_to_global_optima(g)
    else:
        l_go, go_reach = None, 0.0
    return MetricsReport(
        nv=nv, ne=ne, knn=knn, fnn=fnn, wcc_mean=wcc, wcc_rand=wcc_r,
        l_mean=l_mean, l_reach=l_reach, st_mean=st, y2_mean=y2, zout_mean=zout,
        l_go_mean=l_go, l_go_reach=go_reach,
    )
