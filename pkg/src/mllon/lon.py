"""Single-layer local optima networks with basin transition weights."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basins import BasinMap
from .graph import WeightedDigraph
from .neighborhood import OperatorKind, is_valid_move, move_masks, neighbor_count
from .nk import NkInstance

# merge partial (key, count) accumulators once this many keys are pending
_MERGE_AT = 1 << 22


@dataclass(frozen=True, eq=False)
class Lon:
    """Weighted directed LON for one operator.

    Edges hold ``w_ij = p(B_i -> B_j)`` for ``i != j``, sorted by ``(src, dst)``.
    The probability mass that stays inside a basin is kept in ``self_mass``
    rather than as self-loop edges.
    """

    operator: OperatorKind
    n: int
    solution: np.ndarray
    fitness: np.ndarray
    basin_size: np.ndarray
    self_mass: np.ndarray
    src: np.ndarray
    dst: np.ndarray
    weight: np.ndarray
    global_optima: tuple

    @property
    def nv(self) -> int:
        return len(self.solution)

    @property
    def ne(self) -> int:
        return len(self.src)

    def total_mass(self) -> np.ndarray:
        """``self_mass + out-strength`` per node; 1 unless the basin has no moves."""
        return self.self_mass + np.bincount(self.src, weights=self.weight, minlength=self.nv)

    def is_global(self) -> np.ndarray:
        mask = np.zeros(self.nv, bool)
        mask[list(self.global_optima)] = True
        return mask

    def to_graph(self) -> WeightedDigraph:
        return WeightedDigraph(
            src=self.src, dst=self.dst, weight=self.weight,
            fitness=self.fitness, basin_size=self.basin_size, is_global=self.is_global(),
            solution=self.solution, self_mass=self.self_mass, layer_names=(self.operator.value,),
        )


def _merge(keys: list, counts: list):
    k = np.concatenate(keys)
    c = np.concatenate(counts)
    uk, inv = np.unique(k, return_inverse=True)
    return uk, np.bincount(inv, weights=c).astype(np.int64)


def transition_counts(bm: BasinMap, op: OperatorKind):
    """Count every move ``s -> s'`` by (basin of s, basin of s', |Nh(s)|).

    Returns ``(src, dst, degree, count)`` arrays sorted by ``(src, dst, degree)``.
    Integer counting keeps the accumulation exact; the only rounding happens
    when counts are turned into probabilities.
    """
    n = bm.n
    nv = bm.n_optima
    dmax = n * n // 4 + 1 if op is OperatorKind.SWAP else n + 1
    s = np.arange(1 << n, dtype=np.int64)
    a = bm.assignment.astype(np.int64)
    deg = neighbor_count(s, op, n)
    base = a * nv
    keys, counts, pending = [], [], 0
    for mask in move_masks(op, n):
        if op is OperatorKind.SWAP:
            sel = np.flatnonzero(is_valid_move(s, mask, op))
            key = ((base[sel] + a[sel ^ mask]) * dmax) + deg[sel]
        else:
            key = ((base + a[s ^ mask]) * dmax) + deg
        uk, cnt = np.unique(key, return_counts=True)
        keys.append(uk)
        counts.append(cnt)
        pending += len(uk)
        if pending > _MERGE_AT:
            uk, cnt = _merge(keys, counts)
            keys, counts, pending = [uk], [cnt], len(uk)
    if not keys:
        empty = np.zeros(0, np.int64)
        return empty, empty, empty, empty
    uk, cnt = _merge(keys, counts)
    pair, d = np.divmod(uk, dmax)
    src, dst = np.divmod(pair, nv)
    return src, dst, d, cnt


def build_lon(inst: NkInstance, op: OperatorKind, bm: BasinMap) -> Lon:
    """LON whose edge ``i -> j`` carries the mean probability, over ``s`` in
    basin ``i``, that one random move from ``s`` lands in basin ``j``."""
    op = OperatorKind.parse(op)
    if bm.operator is not op:
        raise ValueError(f"basin map was built for {bm.operator.value}, not {op.value}")
    if bm.n != inst.n:
        raise ValueError("basin map and instance disagree on n")
    src, dst, deg, cnt = transition_counts(bm, op)
    part = cnt / deg
    pair = src * bm.n_optima + dst
    starts = np.flatnonzero(np.r_[True, pair[1:] != pair[:-1]]) if len(pair) else np.zeros(0, np.int64)
    psum = np.add.reduceat(part, starts) if len(pair) else np.zeros(0)
    psrc, pdst = src[starts], dst[starts]
    w = psum / bm.basin_sizes[psrc]

    loop = psrc == pdst
    self_mass = np.zeros(bm.n_optima)
    self_mass[psrc[loop]] = w[loop]
    keep = ~loop & (w > 0)
    return Lon(
        operator=op,
        n=inst.n,
        solution=bm.optima.copy(),
        fitness=bm.optima_fitness.copy(),
        basin_size=bm.basin_sizes.copy(),
        self_mass=self_mass,
        src=psrc[keep],
        dst=pdst[keep],
        weight=w[keep],
        global_optima=bm.global_optima,
    )
