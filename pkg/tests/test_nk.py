import numpy as np
import pytest
from hypothesis import given, strategies as st

from helpers import separable
from mllon import NkInstance, fitness, fitness_table, generate_instance
from mllon.nk import to_bits, to_int
import oracles


def test_shapes_n18_k2():
    inst = generate_instance(18, 2, 42)
    assert inst.links.shape == (18, 2)
    assert inst.tables.shape == (18, 8)


def test_k0_has_empty_links_and_two_entry_tables():
    inst = generate_instance(3, 0, 7)
    assert inst.links.shape == (3, 0)
    assert inst.tables.shape == (3, 2)


@pytest.mark.parametrize("n,k", [(2, 2), (5, 7), (4, -1)])
def test_invalid_k_rejected(n, k):
    with pytest.raises(ValueError):
        generate_instance(n, k, 1)


def test_seed_out_of_range():
    with pytest.raises(ValueError):
        generate_instance(4, 1, -1)
    with pytest.raises(ValueError):
        generate_instance(4, 1, 2**64)


def test_separable_extremes():
    inst = separable(5)
    assert fitness(inst, [1] * 5) == 1.0
    assert fitness(inst, [0] * 5) == 0.0


def test_matches_literal_evaluator_on_every_solution():
    inst = generate_instance(3, 1, 7)
    for s in range(8):
        assert fitness(inst, s) == pytest.approx(oracles.nk_value(inst.links, inst.tables, s, 3), abs=1e-15)
    assert fitness(inst, 0b101) == fitness(inst, [1, 0, 1])


def test_length_mismatch():
    inst = generate_instance(3, 1, 7)
    with pytest.raises(ValueError):
        fitness(inst, [1, 0])
    with pytest.raises(ValueError):
        fitness(inst, 8)


def test_instance_is_read_only():
    inst = generate_instance(4, 1, 3)
    with pytest.raises(ValueError):
        inst.tables[0, 0] = 0.5


def test_bad_links_rejected():
    with pytest.raises(ValueError):
        NkInstance(n=3, k=1, links=[[0], [0], [1]], tables=np.zeros((3, 4)))
    with pytest.raises(ValueError):
        NkInstance(n=3, k=1, links=[[1], [0], [1]], tables=np.full((3, 4), 1.5))


@given(n=st.integers(1, 8), data=st.data(), seed=st.integers(0, 2**64 - 1))
def test_generated_instance_invariants(n, data, seed):
    k = data.draw(st.integers(0, n - 1))
    inst = generate_instance(n, k, seed)
    assert inst == generate_instance(n, k, seed)
    for i, row in enumerate(inst.links):
        assert len(set(row.tolist())) == k and i not in row
    assert ((inst.tables >= 0) & (inst.tables < 1)).all()
    table = fitness_table(inst)
    assert ((table >= 0) & (table < 1)).all()
    s = data.draw(st.integers(0, 2**n - 1))
    assert table[s] == fitness(inst, s) == fitness(inst, s)
    assert table[s] == pytest.approx(oracles.nk_value(inst.links, inst.tables, s, n), abs=1e-15)


@given(n=st.integers(1, 30), data=st.data())
def test_encoding_roundtrip(n, data):
    s = data.draw(st.integers(0, 2**n - 1))
    bits = to_bits(s, n)
    assert len(bits) == n
    assert to_int(bits, n) == s
    assert sum(b << i for i, b in enumerate(bits)) == s
