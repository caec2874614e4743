"""A compact weighted digraph with per-node landscape attributes.

Both single LONs and flattened multi-layer networks are handed to the metric
code in this form: node attributes live in parallel arrays, edges in COO arrays
sorted by ``(src, dst)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
import scipy.sparse as sp

EDGE_KINDS = ("intra", "mirror", "overlap")


@dataclass(eq=False)
class WeightedDigraph:
    src: np.ndarray
    dst: np.ndarray
    weight: np.ndarray
    fitness: np.ndarray
    basin_size: np.ndarray
    is_global: np.ndarray
    layer: np.ndarray = None
    opt_id: np.ndarray = None
    solution: np.ndarray = None
    kind: np.ndarray = None
    self_mass: np.ndarray = None
    layer_names: tuple = ()
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        nv = len(self.fitness)
        self.src = np.asarray(self.src, dtype=np.int64)
        self.dst = np.asarray(self.dst, dtype=np.int64)
        self.weight = np.asarray(self.weight, dtype=np.float64)
        self.fitness = np.asarray(self.fitness, dtype=np.float64)
        self.basin_size = np.asarray(self.basin_size, dtype=np.int64)
        self.is_global = np.asarray(self.is_global, dtype=bool)
        self.layer = np.zeros(nv, np.int64) if self.layer is None else np.asarray(self.layer, np.int64)
        self.opt_id = np.arange(nv) if self.opt_id is None else np.asarray(self.opt_id, np.int64)
        self.solution = np.full(nv, -1, np.int64) if self.solution is None else np.asarray(self.solution, np.int64)
        self.kind = np.zeros(len(self.src), np.int8) if self.kind is None else np.asarray(self.kind, np.int8)
        self.self_mass = np.zeros(nv) if self.self_mass is None else np.asarray(self.self_mass, np.float64)
        if not (len(self.src) == len(self.dst) == len(self.weight) == len(self.kind)):
            raise ValueError("edge arrays differ in length")
        for name in ("basin_size", "is_global", "layer", "opt_id", "solution", "self_mass"):
            if len(getattr(self, name)) != nv:
                raise ValueError(f"node attribute {name} has wrong length")
        if len(self.src) and (min(self.src.min(), self.dst.min()) < 0 or max(self.src.max(), self.dst.max()) >= nv):
            raise ValueError("edge endpoint out of range")
        order = np.lexsort((self.dst, self.src))
        if not np.array_equal(order, np.arange(len(order))):
            self.src, self.dst = self.src[order], self.dst[order]
            self.weight, self.kind = self.weight[order], self.kind[order]

    @classmethod
    def from_edges(cls, nv, edges, fitness=None, basin_size=None, is_global=None):
        """Build a bare graph from ``(src, dst, weight)`` triples (handy for fixtures)."""
        edges = list(edges)
        src = [e[0] for e in edges]
        dst = [e[1] for e in edges]
        w = [e[2] for e in edges]
        return cls(
            src=src, dst=dst, weight=w,
            fitness=np.full(nv, np.nan) if fitness is None else fitness,
            basin_size=np.zeros(nv, np.int64) if basin_size is None else basin_size,
            is_global=np.zeros(nv, bool) if is_global is None else is_global,
        )

    @property
    def nv(self) -> int:
        return len(self.fitness)

    @property
    def ne(self) -> int:
        return len(self.src)

    @cached_property
    def csr(self) -> sp.csr_matrix:
        """Weighted adjacency matrix; explicit entries are kept even if zero."""
        m = sp.csr_matrix((self.weight, (self.src, self.dst)), shape=(self.nv, self.nv))
        m.sort_indices()
        return m

    def out_strength(self) -> np.ndarray:
        return np.bincount(self.src, weights=self.weight, minlength=self.nv).astype(np.float64)

    def out_degree(self) -> np.ndarray:
        return np.bincount(self.src, minlength=self.nv)

    def to_networkx(self):
        import networkx as nx

        g = nx.DiGraph()
        for v in range(self.nv):
            attrs = dict(
                fitness=float(self.fitness[v]),
                basin_size=int(self.basin_size[v]),
                is_global_opt=bool(self.is_global[v]),
                layer=int(self.layer[v]),
                opt_id=int(self.opt_id[v]),
                solution=int(self.solution[v]),
                self_mass=float(self.self_mass[v]),
            )
            if self.layer_names:
                attrs["operator"] = self.layer_names[self.layer[v]]
            g.add_node(v, **attrs)
        for a, b, w, k in zip(self.src.tolist(), self.dst.tolist(), self.weight.tolist(), self.kind.tolist()):
            g.add_edge(a, b, weight=w, edge_kind=EDGE_KINDS[k])
        return g
