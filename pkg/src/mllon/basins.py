"""Best-improvement hill climbing from every solution and the induced basins."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .neighborhood import OperatorKind, is_valid_move, move_masks, neighbors
from .nk import NkInstance, fitness, fitness_table, to_int

log = logging.getLogger(__name__)

MAX_ENUM_N = 28


class CapacityError(RuntimeError):
    """Raised when exhaustive enumeration would exceed the size guard."""


@dataclass(frozen=True, eq=False)
class BasinMap:
    """Hill-climbing map ``H`` over the full solution space for one operator.

    ``assignment[s]`` is the identifier of the optimum reached from ``s``.
    Identifiers follow the ascending integer encoding of the optima, so
    ``optima[j]`` is the solution of optimum ``j``.
    """

    operator: OperatorKind
    n: int
    assignment: np.ndarray
    optima: np.ndarray
    optima_fitness: np.ndarray
    basin_sizes: np.ndarray
    global_optima: tuple

    @property
    def n_optima(self) -> int:
        return len(self.optima)

    def members(self, j: int) -> np.ndarray:
        return np.flatnonzero(self.assignment == j)

    def __eq__(self, other):
        if not isinstance(other, BasinMap):
            return NotImplemented
        return (
            self.operator == other.operator
            and self.n == other.n
            and self.global_optima == other.global_optima
            and np.array_equal(self.assignment, other.assignment)
            and np.array_equal(self.optima, other.optima)
            and np.array_equal(self.optima_fitness, other.optima_fitness)
            and np.array_equal(self.basin_sizes, other.basin_sizes)
        )

    __hash__ = None


def hill_climb(inst: NkInstance, op: OperatorKind, s0, table: np.ndarray | None = None) -> int:
    """Climb from ``s0`` to its local optimum.

    Moves to the fittest neighbour while it is strictly fitter than the current
    solution; among equally fit best neighbours the smallest encoding wins.
    ``table`` may carry precomputed fitness values to avoid re-evaluation.
    """
    op = OperatorKind.parse(op)
    f = (lambda x: float(table[x])) if table is not None else (lambda x: fitness(inst, x))
    s = to_int(s0, inst.n)
    fs = f(s)
    while True:
        best, best_f = None, None
        for t in neighbors(s, op, inst.n):  # ascending, so first max wins ties
            ft = f(t)
            if best_f is None or ft > best_f:
                best, best_f = t, ft
        if best is None or not fs < best_f:
            return s
        s, fs = best, best_f


def _best_moves(F: np.ndarray, op: OperatorKind, n: int, lo: int, hi: int) -> np.ndarray:
    """Next solution under one best-improvement step, for starts in ``[lo, hi)``."""
    s = np.arange(lo, hi, dtype=np.int64)
    best_f = np.full(hi - lo, -np.inf)
    best_s = s.copy()
    for mask in move_masks(op, n):
        cand = s ^ mask
        fc = F[cand]
        better = (fc > best_f) | ((fc == best_f) & (cand < best_s))
        if op is OperatorKind.SWAP:
            better &= is_valid_move(s, mask, op)
        best_f = np.where(better, fc, best_f)
        best_s = np.where(better, cand, best_s)
    return np.where(best_f > F[s], best_s, s)


def enumerate_basins(
    inst: NkInstance,
    op: OperatorKind,
    workers: int = 1,
    max_n: int = MAX_ENUM_N,
    table: np.ndarray | None = None,
) -> BasinMap:
    """Run the hill climber from all ``2**n`` solutions and collect the basins.

    The start range is split into ``workers`` contiguous chunks whose step
    maps are merged by index, so the result does not depend on ``workers``.
    """
    op = OperatorKind.parse(op)
    if inst.n > max_n:
        raise CapacityError(f"n={inst.n} exceeds enumeration guard n<={max_n}")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    F = fitness_table(inst) if table is None else table
    size = inst.size
    bounds = np.linspace(0, size, workers + 1).astype(np.int64)
    chunks = list(zip(bounds[:-1], bounds[1:]))
    if workers == 1:
        parts = [_best_moves(F, op, inst.n, int(a), int(b)) for a, b in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda c: _best_moves(F, op, inst.n, int(c[0]), int(c[1])), chunks))
    step = np.concatenate(parts)

    # pointer doubling: climbs are acyclic (fitness strictly increases)
    target = step
    while True:
        nxt = target[target]
        if np.array_equal(nxt, target):
            break
        target = nxt

    optima = np.unique(target)
    assignment = np.searchsorted(optima, target).astype(np.int32)
    sizes = np.bincount(assignment, minlength=len(optima)).astype(np.int64)
    opt_fit = F[optima]
    best = F.max()
    global_ids = tuple(int(j) for j in np.flatnonzero(opt_fit == best))
    log.debug("%s: %d optima", op.value, len(optima))
    return BasinMap(
        operator=op,
        n=inst.n,
        assignment=assignment,
        optima=optima.astype(np.int64),
        optima_fitness=opt_fit,
        basin_sizes=sizes,
        global_optima=global_ids,
    )
