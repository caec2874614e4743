import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helpers import separable
from mllon import CapacityError, OperatorKind, enumerate_basins, fitness_table, generate_instance, hill_climb
import oracles

BF, SW = OperatorKind.BITFLIP, OperatorKind.SWAP

small = st.tuples(st.integers(1, 6), st.integers(0, 5), st.integers(0, 2**32)).map(
    lambda t: generate_instance(t[0], min(t[1], t[0] - 1), t[2]))


def test_separable_climbs_to_all_ones():
    inst = separable(6)
    for s0 in (0, 5, 63):
        assert hill_climb(inst, BF, s0) == 63
    bm = enumerate_basins(inst, BF)
    assert bm.n_optima == 1
    assert bm.basin_sizes.tolist() == [64]
    assert bm.global_optima == (0,)


def test_swap_from_zero_stays():
    assert hill_climb(generate_instance(5, 2, 1), SW, 0) == 0


def test_n4_climbs_match_oracle(n4):
    values = oracles.value_table(n4.links, n4.tables, 4)
    for s0 in range(16):
        assert hill_climb(n4, BF, s0) == oracles.climb(values, s0, "bitflip", 4)[0]


def test_n4_swap_preserves_weight(n4):
    bm = enumerate_basins(n4, SW)
    for s in range(16):
        assert bin(int(bm.optima[bm.assignment[s]])).count("1") == bin(s).count("1")


def test_ties_go_to_smallest_encoding():
    # all-equal landscape: nothing is strictly better, every solution is an optimum
    inst = generate_instance(3, 0, 1)
    flat = type(inst)(n=3, k=0, links=inst.links, tables=np.full((3, 2), 0.5))
    bm = enumerate_basins(flat, BF)
    assert bm.n_optima == 8
    # from 0b001 the moves to 0b011 and 0b101 tie; the smaller one is taken
    tied = type(inst)(n=3, k=0, links=inst.links, tables=[[0.5, 0.0], [0.0, 1.0], [0.0, 1.0]])
    values = oracles.value_table(tied.links, tied.tables, 3)
    assert oracles.climb(values, 0b001, "bitflip", 3)[1][:2] == [0b001, 0b011]
    for s0 in range(8):
        assert hill_climb(tied, BF, s0) == oracles.climb(values, s0, "bitflip", 3)[0]


def test_capacity_guard():
    inst = generate_instance(6, 1, 1)
    with pytest.raises(CapacityError):
        enumerate_basins(inst, BF, max_n=5)
    with pytest.raises(ValueError):
        enumerate_basins(inst, BF, workers=0)


@settings(max_examples=25)
@given(small, st.sampled_from([BF, SW]))
def test_basin_map_matches_oracle(inst, op):
    n = inst.n
    values = oracles.value_table(inst.links, inst.tables, n)
    assign, optima = oracles.basins(values, op.value, n)
    bm = enumerate_basins(inst, op)
    assert bm.optima.tolist() == optima
    assert [int(bm.optima[j]) for j in bm.assignment] == [assign[s] for s in range(2**n)]
    assert bm.basin_sizes.sum() == 2**n
    assert bm.optima_fitness.tolist() == [values[o] for o in optima]


@settings(max_examples=25)
@given(small, st.sampled_from([BF, SW]), st.integers(2, 5))
def test_structural_properties(inst, op, workers):
    table = fitness_table(inst)
    bm = enumerate_basins(inst, op)
    assert enumerate_basins(inst, op, workers=workers) == bm
    for o in bm.optima:
        assert hill_climb(inst, op, int(o)) == o
    values = dict(enumerate(table.tolist()))
    for s0 in range(0, inst.size, 3):
        _, path = oracles.climb(values, s0, op.value, inst.n)
        assert all(values[a] < values[b] for a, b in zip(path, path[1:]))
    if op is SW:
        w = np.bitwise_count(np.arange(inst.size))
        assert (np.bitwise_count(bm.optima[bm.assignment]) == w).all()
    best = table.max()
    assert set(bm.global_optima) == {j for j, f in enumerate(bm.optima_fitness) if f == best}
