from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mllon import OperatorKind, move_probability, neighbors
import oracles

BF, SW = OperatorKind.BITFLIP, OperatorKind.SWAP


def test_bitflip_of_zero():
    assert neighbors(0b000, BF, 3) == [0b001, 0b010, 0b100]


def test_swap_of_zero_is_empty():
    assert neighbors(0b000, SW, 3) == []
    assert neighbors(0b111, SW, 3) == []


def test_swap_0101():
    nb = neighbors(0b0101, SW, 4)
    assert len(nb) == 4
    assert all(bin(t).count("1") == 2 for t in nb)
    assert nb == oracles.swap_neighbours_by_pairs(0b0101, 4)


def test_probabilities():
    assert move_probability(0, 1 << 7, BF, 18) == pytest.approx(1 / 18)
    assert move_probability(0b0011, 0b0101, SW, 4, exact=True) == Fraction(1, 4)
    assert move_probability(5, 5, BF, 4) == 0
    assert move_probability(5, 5, SW, 4) == 0
    assert move_probability(0b0011, 0b0111, SW, 4) == 0


def test_parse_aliases():
    assert OperatorKind.parse("bitflip") is BF
    assert OperatorKind.parse(SW) is SW
    with pytest.raises(ValueError):
        OperatorKind.parse("insert")


solutions = st.integers(1, 7).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2**n - 1)))


@given(solutions, st.sampled_from([BF, SW]))
def test_neighbourhood_matches_full_scan(ns, op):
    n, s = ns
    nb = neighbors(s, op, n)
    assert nb == oracles.neighbourhood(s, op.value, n)
    assert nb == sorted(set(nb))
    w = bin(s).count("1")
    assert len(nb) == (n if op is BF else w * (n - w))


@given(solutions, st.sampled_from([BF, SW]))
def test_probabilities_sum_to_one_or_zero(ns, op):
    n, s = ns
    total = sum(move_probability(s, t, op, n, exact=True) for t in range(2**n))
    assert total == (1 if neighbors(s, op, n) else 0)


@given(solutions, st.sampled_from([BF, SW]))
def test_relation_is_symmetric(ns, op):
    n, s = ns
    for t in neighbors(s, op, n):
        assert s in neighbors(t, op, n)
        if op is SW:
            assert bin(t).count("1") == bin(s).count("1")
            assert move_probability(s, t, op, n, exact=True) == move_probability(t, s, op, n, exact=True)
        assert move_probability(s, t, op, n, exact=True) == oracles.move_prob(s, t, op.value, n)
