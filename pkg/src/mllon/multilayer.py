"""Multi-layer LONs: one layer per operator, joined by inter-layer edges.

Two kinds of inter-layer edge exist.  *Mirror* edges join the copies of an
optimum that is a local optimum in both layers; they carry ``p_co_mirror``.
*Overlap* edges join distinct optima of different layers whose basins share
solutions; they carry ``p_co_diff`` times the Jaccard index of the two basins.
Both are stored as a pair of directed edges of equal weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .basins import BasinMap
from .graph import WeightedDigraph
from .lon import Lon
from .nk import NkInstance

INTRA, MIRROR, OVERLAP = 0, 1, 2


@dataclass(frozen=True)
class MllonConfig:
    """Transition probabilities of the multi-layer model.

    The defaults allow a change of layer only at a shared optimum.
    """

    p_sl: float = 0.0
    p_co_mirror: float = 1.0
    p_co_diff: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.p_sl <= 1.0:
            raise ValueError(f"p_sl must be in [0, 1], got {self.p_sl}")
        if not 0.0 < self.p_co_mirror <= 1.0:
            raise ValueError(f"p_co_mirror must be in (0, 1], got {self.p_co_mirror}")
        if not 0.0 <= self.p_co_diff <= 1.0:
            raise ValueError(f"p_co_diff must be in [0, 1], got {self.p_co_diff}")


@dataclass(frozen=True, eq=False)
class InterEdges:
    """Directed inter-layer edges between ``(layer, optimum id)`` supra-nodes."""

    src_layer: np.ndarray
    src_id: np.ndarray
    dst_layer: np.ndarray
    dst_id: np.ndarray
    weight: np.ndarray

    def __len__(self):
        return len(self.weight)

    @classmethod
    def concat(cls, parts):
        parts = list(parts)
        if not parts:
            z = np.zeros(0, np.int64)
            return cls(z, z, z, z, np.zeros(0))
        return cls(*(np.concatenate([getattr(p, f) for p in parts]) for f in
                     ("src_layer", "src_id", "dst_layer", "dst_id", "weight")))


@dataclass(frozen=True, eq=False)
class Mllon:
    layers: tuple  # of Lon, layer index = position
    basin_maps: tuple
    mirror_edges: InterEdges
    overlap_edges: InterEdges
    config: MllonConfig

    @property
    def offsets(self) -> np.ndarray:
        return np.cumsum([0] + [lon.nv for lon in self.layers])

    @property
    def n_supra_nodes(self) -> int:
        return int(self.offsets[-1])

    def supra_nodes(self) -> list[tuple[int, int]]:
        return [(li, j) for li, lon in enumerate(self.layers) for j in range(lon.nv)]


def jaccard_overlap(bm_a: BasinMap, i: int, bm_b: BasinMap, j: int) -> float:
    """``|B_i & B_j| / |B_i | B_j|`` for basin ``i`` of ``bm_a`` and ``j`` of ``bm_b``."""
    if bm_a.n != bm_b.n:
        raise ValueError(f"basin maps disagree on n ({bm_a.n} vs {bm_b.n})")
    in_a = bm_a.assignment == i
    in_b = bm_b.assignment == j
    union = np.count_nonzero(in_a | in_b)
    if union == 0:
        return 0.0
    return np.count_nonzero(in_a & in_b) / union


def basin_intersections(bm_a: BasinMap, bm_b: BasinMap):
    """All basin pairs with a common solution, found in one joint scan.

    Returns ``(i, j, intersection, union)`` arrays sorted by ``(i, j)``.
    """
    if bm_a.n != bm_b.n:
        raise ValueError(f"basin maps disagree on n ({bm_a.n} vs {bm_b.n})")
    nb = bm_b.n_optima
    key = bm_a.assignment.astype(np.int64) * nb + bm_b.assignment
    pairs, inter = np.unique(key, return_counts=True)
    i, j = np.divmod(pairs, nb)
    union = bm_a.basin_sizes[i] + bm_b.basin_sizes[j] - inter
    return i, j, inter, union


def _both_ways(la, ia, lb, ib, w) -> InterEdges:
    fa = np.full(len(ia), la, np.int64)
    fb = np.full(len(ib), lb, np.int64)
    return InterEdges(
        np.concatenate([fa, fb]), np.concatenate([ia, ib]),
        np.concatenate([fb, fa]), np.concatenate([ib, ia]),
        np.concatenate([w, w]),
    )


def build_mllon(
    inst: NkInstance,
    layers,
    cfg: MllonConfig = MllonConfig(),
) -> Mllon:
    """Assemble a multi-layer LON from ``(operator, BasinMap, Lon)`` triples.

    Intra-layer weights are copied unchanged; inter-layer edges are added on
    top without renormalising any node's outgoing mass.
    """
    layers = list(layers)
    if len(layers) < 2:
        raise ValueError("a multi-layer LON needs at least two layers")
    ops = [op for op, _, _ in layers]
    if len(set(ops)) != len(ops):
        raise ValueError(f"duplicate operators in layers: {[o.value for o in ops]}")
    for op, bm, lon in layers:
        if bm.operator is not op or lon.operator is not op:
            raise ValueError(f"layer tagged {op.value} holds data for another operator")
        if bm.n != inst.n or lon.n != inst.n:
            raise ValueError("layers come from instances of different size")
        if not np.array_equal(bm.optima, lon.solution):
            raise ValueError(f"{op.value} LON does not match its basin map")

    mirrors, overlaps = [], []
    for (la, (_, bma, _)), (lb, (_, bmb, _)) in combinations(enumerate(layers), 2):
        common, ia, ib = np.intersect1d(bma.optima, bmb.optima, assume_unique=True, return_indices=True)
        mirrors.append(_both_ways(la, ia, lb, ib, np.full(len(common), cfg.p_co_mirror)))
        if cfg.p_co_diff > 0:
            i, j, inter, union = basin_intersections(bma, bmb)
            distinct = bma.optima[i] != bmb.optima[j]
            i, j = i[distinct], j[distinct]
            jac = inter[distinct] / union[distinct]
            overlaps.append(_both_ways(la, i, lb, j, cfg.p_co_diff * jac))
    return Mllon(
        layers=tuple(lon for _, _, lon in layers),
        basin_maps=tuple(bm for _, bm, _ in layers),
        mirror_edges=InterEdges.concat(mirrors),
        overlap_edges=InterEdges.concat(overlaps),
        config=cfg,
    )


def flatten(m) -> WeightedDigraph:
    """Single weighted digraph over all supra-nodes (layer-major order).

    The edge set is the union of intra-layer, mirror and overlap edges; the
    edge ``kind`` array records which is which.  A plain :class:`Lon` flattens
    to its own graph.
    """
    if isinstance(m, Lon):
        return m.to_graph()
    off = m.offsets
    src, dst, w, kind = [], [], [], []
    for li, lon in enumerate(m.layers):
        src.append(lon.src + off[li])
        dst.append(lon.dst + off[li])
        w.append(lon.weight)
        kind.append(np.full(lon.ne, INTRA, np.int8))
    for code, e in ((MIRROR, m.mirror_edges), (OVERLAP, m.overlap_edges)):
        src.append(off[e.src_layer] + e.src_id)
        dst.append(off[e.dst_layer] + e.dst_id)
        w.append(e.weight)
        kind.append(np.full(len(e), code, np.int8))
    cat = np.concatenate
    return WeightedDigraph(
        src=cat(src), dst=cat(dst), weight=cat(w), kind=cat(kind),
        fitness=cat([lon.fitness for lon in m.layers]),
        basin_size=cat([lon.basin_size for lon in m.layers]),
        is_global=cat([lon.is_global() for lon in m.layers]),
        layer=cat([np.full(lon.nv, li, np.int64) for li, lon in enumerate(m.layers)]),
        opt_id=cat([np.arange(lon.nv) for lon in m.layers]),
        solution=cat([lon.solution for lon in m.layers]),
        self_mass=cat([lon.self_mass for lon in m.layers]),
        layer_names=tuple(lon.operator.value for lon in m.layers),
        meta={"p_sl": m.config.p_sl, "p_co_mirror": m.config.p_co_mirror, "p_co_diff": m.config.p_co_diff},
    )
