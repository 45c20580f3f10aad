import itertools
import random
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from radixforge import (BlockOp, OperatorSchedule, ParseError, apply_block,
                        complement_op, compose, cycles, identity_op,
                        index_of_perm, inverse, op_order, perm_from_index)
from radixforge.fixtures import pair_lead_flip_op, septenary_cycle_op, ternary_swap_op
from support import random_op

SHAPES = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (7, 1)]


def test_ternary_single_digit_table():
    rows = [tuple(perm_from_index(3, 1, i).table[j][0] for j in range(3)) for i in range(6)]
    assert rows == [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]


def test_complement_anchor_k2():
    op = perm_from_index(2, 2, 23)
    assert op.table == ((1, 1), (1, 0), (0, 1), (0, 0))
    assert op.is_complement


@pytest.mark.parametrize("s, k", SHAPES)
def test_anchor_indices(s, k):
    assert perm_from_index(s, k, 0) == identity_op(s, k)
    assert perm_from_index(s, k, factorial(s ** k) - 1) == complement_op(s, k)
    assert index_of_perm(identity_op(s, k)) == 0
    assert index_of_perm(complement_op(s, k)) == factorial(s ** k) - 1


def test_index_of_perm_brute_force_oracle():
    # Oracle: enumerate all 7! single-digit tables lexicographically.
    perms = sorted(itertools.permutations(range(7)))
    rank = perms.index((3, 5, 6, 4, 0, 2, 1))
    assert rank == 2755
    assert index_of_perm(septenary_cycle_op()) == rank
    assert perm_from_index(7, 1, rank) == septenary_cycle_op()


def test_identity_index_is_zero_for_ternary():
    assert index_of_perm(identity_op(3, 1)) == 0


@pytest.mark.parametrize("s, k", SHAPES)
def test_index_round_trip_random(s, k):
    rng = random.Random(s * 100 + k)
    for _ in range(25):
        i = rng.randrange(factorial(s ** k))
        op = perm_from_index(s, k, i)
        assert index_of_perm(op) == i


@given(st.sampled_from(SHAPES), st.data())
@settings(max_examples=60, deadline=None)
def test_perm_from_index_is_bijection(shape, data):
    s, k = shape
    i = data.draw(st.integers(0, factorial(s ** k) - 1))
    op = perm_from_index(s, k, i)
    assert sorted(op.table) == sorted(itertools.product(range(s), repeat=k))


def test_perm_from_index_range_errors():
    with pytest.raises(ValueError):
        perm_from_index(2, 2, factorial(4))
    with pytest.raises(ValueError):
        perm_from_index(2, 2, -1)
    # Largest valid index still decodes, using arbitrary precision throughout.
    big = factorial(2 ** 3) - 1
    assert perm_from_index(2, 3, big) == complement_op(2, 3)


def test_apply_block_examples():
    assert apply_block(pair_lead_flip_op(), (1, 1)) == (0, 1)
    assert apply_block(septenary_cycle_op(), (1,)) == (5,)
    assert apply_block(identity_op(3, 2), (2, 1)) == (2, 1)


def test_apply_block_errors():
    with pytest.raises(ValueError):
        apply_block(pair_lead_flip_op(), (1,))
    with pytest.raises(ValueError):
        apply_block(pair_lead_flip_op(), (2, 0))


def test_table_must_be_bijection():
    with pytest.raises(ValueError):
        BlockOp(2, 1, ((0,), (0,)))


def test_ternary_swap_is_involution():
    sw = ternary_swap_op()
    assert compose(sw, sw) == identity_op(3, 1)
    assert op_order(sw) == 2


def test_inverse_of_complement_is_complement():
    for s, k in SHAPES:
        assert inverse(complement_op(s, k)) == complement_op(s, k)


def test_septenary_cycle_powers():
    op = septenary_cycle_op()
    cubed = compose(op, compose(op, op))
    for fixed in (0, 3, 4):
        assert apply_block(cubed, (fixed,)) == (fixed,)
    for moved in (1, 2, 5, 6):
        assert apply_block(cubed, (moved,)) != (moved,)
    fourth = compose(op, cubed)
    for fixed in (1, 2, 5, 6):
        assert apply_block(fourth, (fixed,)) == (fixed,)
    assert op_order(op) == 12
    assert sorted(sorted(c) for c in cycles(op)) == [[0, 3, 4], [1, 2, 5, 6]]


def test_group_laws_exhaustive_two_bit_blocks():
    ops = [perm_from_index(2, 2, i) for i in range(24)]
    ident = identity_op(2, 2)
    for op in ops:
        assert compose(op, inverse(op)) == ident
        power = ident
        for _ in range(op_order(op)):
            power = compose(op, power)
        assert power == ident
        assert 24 % op_order(op) == 0
    rng = random.Random(22)
    for _ in range(300):
        a, b, c = (rng.choice(ops) for _ in range(3))
        assert compose(a, compose(b, c)) == compose(compose(a, b), c)


def test_compose_requires_matching_shape():
    with pytest.raises(ValueError):
        compose(identity_op(2, 1), identity_op(2, 2))
    with pytest.raises(ValueError):
        compose(identity_op(2, 1), identity_op(3, 1))


def test_op_json_round_trip():
    rng = random.Random(5)
    for s, k in SHAPES:
        op = random_op(rng, s, k)
        obj = op.to_json()
        assert isinstance(obj["index"], str)
        assert BlockOp.from_json(obj) == op
    table_obj = {"s": 2, "k": 2, "table": [[1, 0], [1, 1], [0, 0], [0, 1]]}
    assert BlockOp.from_json(table_obj) == pair_lead_flip_op()
    with pytest.raises(ParseError):
        BlockOp.from_json({"s": 2, "k": 2})


def test_schedule_structure_and_json():
    rng = random.Random(6)
    sch = OperatorSchedule(2, (random_op(rng, 2, 2),), (random_op(rng, 2, 1), random_op(rng, 2, 3)))
    assert sch.pre_digits == 2
    assert sch.per_digits == 4
    assert [sch.op_for_block(n).k for n in range(1, 6)] == [2, 1, 3, 1, 3]
    assert sch.boundaries_upto(10) == [2, 3, 6, 7, 10]
    assert sch.is_boundary(0) and sch.is_boundary(6) and sch.is_boundary(10)
    assert not sch.is_boundary(4)
    assert OperatorSchedule.from_json(sch.to_json()) == sch


def test_schedule_rejects_base_mismatch():
    with pytest.raises(ValueError):
        OperatorSchedule(2, (), (identity_op(3, 1),))
    with pytest.raises(ValueError):
        OperatorSchedule(2, (), ())


def test_schedule_inverse_and_anchors():
    sch = OperatorSchedule(2, (complement_op(2, 2),), (identity_op(2, 1),))
    assert sch.inverse() == sch  # anchors are involutions
    assert not sch.all_identity and not sch.all_complement
    assert sch.anchors_cofinitely
    assert OperatorSchedule.constant(identity_op(2, 1)).all_identity
    assert OperatorSchedule.constant(complement_op(3, 2)).all_complement


def test_apply_prefix_requires_block_alignment():
    sch = OperatorSchedule.constant(pair_lead_flip_op())
    assert sch.apply_prefix((1, 1, 0, 0)) == (0, 1, 1, 0)
    with pytest.raises(ValueError):
        sch.apply_prefix((1, 1, 0))


def test_dense_table_guard():
    with pytest.raises(ValueError):
        identity_op(2, 21)
