"""NK-landscape instances (random neighbourhood model).

Solutions are encoded as unsigned integers in ``[0, 2**n)`` where bit ``i`` of
the integer is variable ``i``.  The sub-function of variable ``i`` is looked up
with an index built from the variable's own bit followed by the bits at
``links[i]`` in stored order, most significant first::

    index = s_i << k | s_{links[i][0]} << (k - 1) | ... | s_{links[i][k-1]}

Instances are generated from a single 64-bit seed.  ``SeedSequence(seed)`` is
spawned into ``n`` children, one per variable, and each child drives its own
``PCG64`` generator that draws first the link permutation and then the table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

Solution = Union[int, Sequence[int]]

MAX_SEED = 2**64 - 1


@dataclass(frozen=True, eq=False)
class NkInstance:
    """An immutable NK-landscape instance.

    Attributes
    ----------
    n : int
        Number of binary variables.
    k : int
        Epistasis degree, ``0 <= k <= n - 1``.
    links : np.ndarray
        ``(n, k)`` integer array; row ``i`` lists the variables linked to ``i``.
    tables : np.ndarray
        ``(n, 2**(k+1))`` array of sub-function values; generated instances
        draw them from ``[0, 1)``, hand-built ones may use the closed interval.
    seed : int
        Seed the instance was generated from.
    """

    n: int
    k: int
    links: np.ndarray
    tables: np.ndarray
    seed: int = 0

    def __post_init__(self):
        links = np.array(self.links, dtype=np.int64).reshape(self.n, self.k)
        tables = np.array(self.tables, dtype=np.float64).reshape(self.n, 2 ** (self.k + 1))
        _validate(self.n, self.k, links, tables, self.seed)
        links.flags.writeable = False
        tables.flags.writeable = False
        object.__setattr__(self, "links", links)
        object.__setattr__(self, "tables", tables)

    def __eq__(self, other):
        if not isinstance(other, NkInstance):
            return NotImplemented
        return (
            self.n == other.n
            and self.k == other.k
            and self.seed == other.seed
            and np.array_equal(self.links, other.links)
            and np.array_equal(self.tables, other.tables)
        )

    __hash__ = None

    @property
    def size(self) -> int:
        """Number of solutions, ``2**n``."""
        return 1 << self.n


def _validate(n, k, links, tables, seed):
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must satisfy 0 <= k <= n-1, got n={n}, k={k}")
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    for i, row in enumerate(links):
        if len(set(row.tolist())) != k or i in row or ((row < 0) | (row >= n)).any():
            raise ValueError(f"links[{i}] must hold {k} distinct indices != {i}")
    if ((tables < 0.0) | (tables > 1.0)).any():
        raise ValueError("sub-function values must lie in [0, 1]")


def generate_instance(n: int, k: int, seed: int) -> NkInstance:
    """Draw a random-neighbourhood NK instance, deterministic in ``(n, k, seed)``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must satisfy 0 <= k <= n-1, got n={n}, k={k}")
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    children = np.random.SeedSequence(seed).spawn(n)
    links = np.empty((n, k), dtype=np.int64)
    tables = np.empty((n, 2 ** (k + 1)), dtype=np.float64)
    for i, child in enumerate(children):
        rng = np.random.Generator(np.random.PCG64(child))
        others = np.array([j for j in range(n) if j != i], dtype=np.int64)
        links[i] = rng.permutation(others)[:k]
        tables[i] = rng.random(2 ** (k + 1))
    return NkInstance(n=n, k=k, links=links, tables=tables, seed=seed)


def to_int(s: Solution, n: int) -> int:
    """Canonical integer encoding of a solution given as int or bit sequence."""
    if isinstance(s, (int, np.integer)):
        s = int(s)
        if not 0 <= s < (1 << n):
            raise ValueError(f"solution {s} out of range for n={n}")
        return s
    bits = list(s)
    if len(bits) != n:
        raise ValueError(f"solution has length {len(bits)}, expected {n}")
    value = 0
    for i, b in enumerate(bits):
        if b not in (0, 1, True, False):
            raise ValueError(f"bit {i} is {b!r}, expected 0 or 1")
        value |= int(b) << i
    return value


def to_bits(s: int, n: int) -> list[int]:
    return [(s >> i) & 1 for i in range(n)]


def table_index(inst: NkInstance, i: int, s: int) -> int:
    idx = (s >> i) & 1
    for j in inst.links[i]:
        idx = (idx << 1) | ((s >> int(j)) & 1)
    return idx


def fitness(inst: NkInstance, s: Solution) -> float:
    """Mean of the ``n`` sub-function values of solution ``s``."""
    s = to_int(s, inst.n)
    total = 0.0
    for i in range(inst.n):
        total += float(inst.tables[i, table_index(inst, i, s)])
    return total / inst.n


def fitness_table(inst: NkInstance) -> np.ndarray:
    """Fitness of every solution, indexed by integer encoding.

    Uses the same summation order as :func:`fitness`, so values agree bit for bit.
    """
    s = np.arange(inst.size, dtype=np.int64)
    total = np.zeros(inst.size, dtype=np.float64)
    for i in range(inst.n):
        idx = (s >> i) & 1
        for j in inst.links[i]:
            idx = (idx << 1) | ((s >> int(j)) & 1)
        total += inst.tables[i][idx]
    return total / inst.n
