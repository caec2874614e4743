"""Compiled inner loops for the graph metrics.

All-pairs hop distances use a bit-parallel breadth-first search: 64 sources
share one machine word per vertex, and ``words`` words are processed per pass,
so one sweep over the edge list advances ``64 * words`` searches by one level.
"""

import numpy as np
from numba import njit

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(cache=True)
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return (x * _H01) >> np.uint64(56)


@njit(cache=True)
def bfs_block(indptr, indices, nv, first, count, words):
    """Sum of hop distances and number of reached targets for sources
    ``first .. first+count-1`` (each source itself excluded)."""
    visited = np.zeros((nv, words), dtype=np.uint64)
    frontier = np.zeros((nv, words), dtype=np.uint64)
    nxt = np.zeros((nv, words), dtype=np.uint64)
    one = np.uint64(1)
    for b in range(count):
        bit = one << np.uint64(b & 63)
        visited[first + b, b >> 6] |= bit
        frontier[first + b, b >> 6] |= bit
    total = 0
    pairs = 0
    level = 0
    active = True
    while active:
        level += 1
        nxt[:, :] = 0
        for u in range(nv):
            live = False
            for w in range(words):
                if frontier[u, w] != 0:
                    live = True
                    break
            if not live:
                continue
            for p in range(indptr[u], indptr[u + 1]):
                v = indices[p]
                for w in range(words):
                    nxt[v, w] |= frontier[u, w]
        active = False
        for v in range(nv):
            for w in range(words):
                fresh = nxt[v, w] & ~visited[v, w]
                frontier[v, w] = fresh
                if fresh != 0:
                    visited[v, w] |= fresh
                    c = np.int64(_popcount(fresh))
                    total += level * c
                    pairs += c
                    active = True
    return total, pairs


@njit(cache=True)
def barrat_numerators(indptr, indices, weights, nv):
    """``sum_j w_ij * |N(i) & N(j)|`` per node of a symmetric graph without loops."""
    stamp = np.zeros(nv, dtype=np.int64)
    out = np.zeros(nv, dtype=np.float64)
    for i in range(nv):
        for p in range(indptr[i], indptr[i + 1]):
            stamp[indices[p]] = i + 1
        acc = 0.0
        for p in range(indptr[i], indptr[i + 1]):
            j = indices[p]
            common = 0
            for q in range(indptr[j], indptr[j + 1]):
                if stamp[indices[q]] == i + 1:
                    common += 1
            acc += weights[p] * common
        out[i] = acc
    return out
