"""Shared builders for the test-suite."""

from pathlib import Path

import numpy as np

from mllon import NkInstance, WeightedDigraph

GOLDEN = Path(__file__).parent / "golden"


def separable(n: int) -> NkInstance:
    """k=0 instance where every variable scores 1 when set, so all-ones is best."""
    return NkInstance(n=n, k=0, links=np.empty((n, 0), np.int64), tables=np.tile([0.0, 1.0], (n, 1)))


def graph(nv, w: dict, fitness=None, go=()):
    """WeightedDigraph from an ``{(i, j): weight}`` dict."""
    is_global = np.zeros(nv, bool)
    is_global[list(go)] = True
    fit = np.zeros(nv) if fitness is None else np.asarray(fitness, float)
    return WeightedDigraph.from_edges(
        nv, [(i, j, x) for (i, j), x in sorted(w.items())],
        fitness=fit, basin_size=np.ones(nv, np.int64), is_global=is_global,
    )
