"""Bit-flip and 1-swap neighbourhoods over integer-encoded bit strings."""

from __future__ import annotations

import enum
from fractions import Fraction

import numpy as np


class OperatorKind(str, enum.Enum):
    BITFLIP = "bitflip"
    SWAP = "swap"

    @classmethod
    def parse(cls, value) -> "OperatorKind":
        if isinstance(value, cls):
            return value
        aliases = {"bitflip": cls.BITFLIP, "bit-flip": cls.BITFLIP, "bf": cls.BITFLIP,
                   "swap": cls.SWAP, "1-swap": cls.SWAP, "oneswap": cls.SWAP, "sw": cls.SWAP}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise ValueError(f"unknown operator {value!r}") from None


def move_masks(op: OperatorKind, n: int) -> list[int]:
    """XOR masks generating every move of ``op``, in ascending order."""
    if op is OperatorKind.BITFLIP:
        return [1 << i for i in range(n)]
    return sorted((1 << i) | (1 << j) for i in range(n) for j in range(i + 1, n))


def is_valid_move(s, mask: int, op: OperatorKind):
    """Whether XOR-ing ``mask`` into ``s`` is a legal move (vectorises over ``s``).

    A swap mask is legal only when it touches exactly one set bit, i.e. it
    exchanges a 1-position with a 0-position.
    """
    if op is OperatorKind.BITFLIP:
        return np.ones_like(s, dtype=bool) if isinstance(s, np.ndarray) else True
    return np.bitwise_count(np.asarray(s) & mask) == 1 if isinstance(s, np.ndarray) \
        else bin(s & mask).count("1") == 1


def neighbor_count(s, op: OperatorKind, n: int):
    """Neighbourhood size: ``n`` for bit-flip, ``ones * zeros`` for swap."""
    if op is OperatorKind.BITFLIP:
        return np.full(np.shape(s), n, dtype=np.int64) if isinstance(s, np.ndarray) else n
    if isinstance(s, np.ndarray):
        ones = np.bitwise_count(s).astype(np.int64)
    else:
        ones = bin(s).count("1")
    return ones * (n - ones)


def neighbors(s: int, op: OperatorKind, n: int) -> list[int]:
    """All neighbours of ``s`` in ascending integer order."""
    op = OperatorKind.parse(op)
    return sorted(s ^ m for m in move_masks(op, n) if is_valid_move(s, m, op))


def move_probability(s: int, s_prime: int, op: OperatorKind, n: int, exact: bool = False):
    """Probability that a uniformly chosen move of ``op`` takes ``s`` to ``s_prime``.

    Returns a :class:`~fractions.Fraction` when ``exact`` is set.
    """
    op = OperatorKind.parse(op)
    diff = s ^ s_prime
    if (s | s_prime) >> n:
        hit = False
    elif op is OperatorKind.BITFLIP:
        hit = diff != 0 and diff & (diff - 1) == 0
    else:
        hit = bin(diff).count("1") == 2 and bin(s & diff).count("1") == 1
    if not hit:
        return Fraction(0) if exact else 0.0
    size = neighbor_count(s, op, n)
    return Fraction(1, size) if exact else 1.0 / size
