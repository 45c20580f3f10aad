import random
from fractions import Fraction as F

import pytest

from radixforge import (CumulativeOffsets, F_eta, ProbabilityVector,
                        continuity_classify, distance_counterexample,
                        distribution_rows, decimal_string, evaluate, expand,
                        f_D, monotonicity_scan, partition_integral,
                        pseudo_value, transform)
from radixforge.blockops import (OperatorSchedule, complement_op, identity_op,
                                 perm_from_index)
from radixforge.fixtures import (complement_schedule, identity_schedule,
                                 pair_lead_flip_schedule, ternary_swap_schedule)
from support import first_boundary_at_least, random_schedule


def test_continuity_identity_everywhere():
    sch = identity_schedule()
    for x in (F(0), F(1, 4), F(1, 3), F(1, 2), F(1)):
        assert continuity_classify(x, sch).continuous


def test_continuity_pair_lead_flip_at_half():
    res = continuity_classify(F(1, 2), pair_lead_flip_schedule())
    assert not res.continuous
    assert {res.left, res.right} == {F(1, 6), F(5, 6)}
    assert res.jump == F(2, 3)


def test_continuity_ternary_swap_at_third():
    # One-sided limits come from the two expansions: 1(0) maps to value 2/3,
    # 0(2) maps to the word 0(1) of value 1/6.
    sch = ternary_swap_schedule()
    assert evaluate(transform(expand(F(1, 3), 3), sch)) == F(2, 3)
    res = continuity_classify(F(1, 3), sch)
    assert (res.left, res.right) == (F(1, 6), F(2, 3))
    assert res.jump == F(1, 2)


def test_continuity_non_base_rational_is_continuous():
    assert continuity_classify(F(1, 5), pair_lead_flip_schedule()).continuous
    assert continuity_classify(F(1, 3), identity_schedule()).continuous


def _strict_jump_bound(sch):
    """Whether the jump bound is attained strictly for every endpoint.

    The two one-sided limits at an endpoint land exactly on the ends of
    their common cylinder (jump equal to the bound) only when every later
    block maps constant tuples to constant tuples the same way: all fixing
    both the 0- and 1-tuple, or all swapping them.  A period outside those
    two families keeps every jump strictly below the bound.
    """
    m = lambda op: (op.rank_map[0], op.rank_map[-1])
    fixes = all(m(op) == (0, len(op.table) - 1) for op in sch.per)
    swaps = all(m(op) == (len(op.table) - 1, 0) for op in sch.per)
    return not fixes and not swaps


def test_jump_bound_random_schedules():
    rng = random.Random(51)
    for _ in range(10):
        sch = random_schedule(rng, s=2, max_k=3, max_pre=2, max_per=2)
        strict = _strict_jump_bound(sch)
        for m in range(1, 7):
            for j in range(1, 2 ** m, 2):
                res = continuity_classify(F(j, 2 ** m), sch)
                if res.continuous:
                    continue
                _, prev = first_boundary_at_least(sch, m)
                bound = F(1, 2 ** prev)
                assert res.jump <= bound
                if strict:
                    assert res.jump < bound


def test_monotonicity_identity_and_complement():
    assert monotonicity_scan(identity_schedule(), 4).kind == "strictly-increasing"
    assert monotonicity_scan(complement_schedule(), 4).kind == "strictly-decreasing"
    assert monotonicity_scan(identity_schedule(3, 2), 4).kind == "strictly-increasing"
    assert monotonicity_scan(complement_schedule(2, 3), 6).kind == "strictly-decreasing"


def test_monotonicity_anchor_mix_is_piecewise():
    sch = OperatorSchedule(2, (complement_op(2, 1),), (identity_op(2, 1),))
    res = monotonicity_scan(sch, 4)
    assert res.kind == "piecewise-monotone"
    assert res.witness is None


def test_monotonicity_pair_lead_flip_with_witness():
    res = monotonicity_scan(pair_lead_flip_schedule(), 4)
    assert res.kind == "non-monotone"
    x1, x2, x3 = res.witness
    assert x1 < x2 < x3
    sch = pair_lead_flip_schedule()
    f1, f2, f3 = (pseudo_value(x, sch) for x in (x1, x2, x3))
    assert (f2 - f1) * (f3 - f2) < 0


def test_monotonicity_witness_on_random_mixed_schedules():
    rng = random.Random(52)
    found = 0
    for _ in range(30):
        sch = random_schedule(rng, s=2, max_k=2, max_pre=1, max_per=2)
        rank = sch.pre_digits + 2 * sch.per_digits
        res = monotonicity_scan(sch, rank)
        if res.kind != "non-monotone":
            continue
        found += 1
        x1, x2, x3 = res.witness
        f1, f2, f3 = (pseudo_value(x, sch) for x in (x1, x2, x3))
        assert (f2 - f1) * (f3 - f2) < 0
    assert found > 5


def test_monotonicity_witness_needs_rank_reaching_the_mixing_block():
    sch = OperatorSchedule(2, (identity_op(2, 1),), (perm_from_index(2, 2, 5),))
    shallow = monotonicity_scan(sch, 1)
    assert shallow.kind == "non-monotone" and shallow.witness is None
    deep = monotonicity_scan(sch, 3)
    assert deep.kind == "non-monotone" and deep.witness is not None


def test_distance_late_anchor_switch_still_found():
    sch = OperatorSchedule(2, (identity_op(2, 2), identity_op(2, 3)),
                           (identity_op(2, 2), complement_op(2, 1)))
    rank = sch.pre_digits + 2 * sch.per_digits
    pair = distance_counterexample(sch, rank)
    assert pair is not None
    x1, x2 = pair
    assert abs(pseudo_value(x2, sch) - pseudo_value(x1, sch)) != x2 - x1


def test_distance_counterexample_ternary_swap():
    pair = distance_counterexample(ternary_swap_schedule(), 2)
    assert pair is not None
    x1, x2 = pair
    sch = ternary_swap_schedule()
    assert abs(pseudo_value(x2, sch) - pseudo_value(x1, sch)) != x2 - x1


def test_distance_paper_pair_values():
    sch = ternary_swap_schedule()
    assert abs(pseudo_value(F(4, 9), sch) - pseudo_value(F(1, 3), sch)) == F(2, 9)
    assert abs(F(4, 9) - F(1, 3)) == F(1, 9)


def test_distance_none_for_isometries():
    assert distance_counterexample(identity_schedule(), 4) is None
    assert distance_counterexample(complement_schedule(), 4) is None
    assert distance_counterexample(identity_schedule(2, 2), 4) is None


def test_distance_agrees_with_monotonicity_dichotomy():
    rng = random.Random(53)
    for _ in range(25):
        sch = random_schedule(rng, s=2, max_k=2, max_pre=1, max_per=2)
        rank = sch.pre_digits + 2 * sch.per_digits
        witness = distance_counterexample(sch, rank)
        kind = monotonicity_scan(sch, rank).kind
        strict = kind in ("strictly-increasing", "strictly-decreasing")
        assert (witness is None) == strict


@pytest.mark.parametrize("n, expected", [(1, F(1, 4)), (3, F(7, 16))])
def test_partition_integral_formula_points(n, expected):
    assert partition_integral(identity_schedule(), n) == expected
    assert partition_integral(pair_lead_flip_schedule(), n) == F(2 ** (2 * n) - 1, 2 ** (2 * n + 1))


def test_partition_integral_identity_two_blocks_brute():
    # Four rank-2 cylinders with infima 0, 1/4, 1/2, 3/4 and weight 1/4 each.
    infima = [F(j, 4) for j in range(4)]
    assert partition_integral(identity_schedule(), 2) == sum(infima) / 4 == F(3, 8)


def test_partition_integral_schedule_independent():
    rng = random.Random(54)
    for _ in range(8):
        sch = random_schedule(rng, s=2, max_k=3, max_pre=2, max_per=2)
        K = 0
        for n in range(1, 7):
            K += sch.op_for_block(n).k
            if K > 12:
                break
            assert partition_integral(sch, n) == F(2 ** K - 1, 2 ** (K + 1))


def test_partition_integral_ternary():
    assert partition_integral(ternary_swap_schedule(), 2) == F(9 - 1, 2 * 9)


def test_partition_integral_needs_blocks():
    with pytest.raises(ValueError):
        partition_integral(identity_schedule(), 0)


def test_probability_vector_validation():
    with pytest.raises(ValueError):
        ProbabilityVector.constant([F(1, 2), F(1, 3)])
    with pytest.raises(ValueError):
        ProbabilityVector.constant([F(3, 2), F(-1, 2)])
    with pytest.raises(ValueError):
        ProbabilityVector(2, (), ())
    vec = ProbabilityVector.constant([F(1, 4), F(3, 4)])
    assert vec.offsets_at(1).values == (F(0), F(1, 4))


def test_cumulative_offsets_validation():
    CumulativeOffsets((F(0), F(1, 4)))
    with pytest.raises(ValueError):
        CumulativeOffsets((F(1, 4),))
    with pytest.raises(ValueError):
        CumulativeOffsets((F(0), F(3, 4), F(1, 2)))


def test_F_eta_uniform_is_identity():
    p = ProbabilityVector.uniform(2)
    for i in range(0, 257, 7):
        x = F(i, 256)
        assert F_eta(x, p) == x
    assert F_eta(F(1, 3), p) == F(1, 3)


def test_F_eta_simple_value_with_partial_sum_oracle():
    p = ProbabilityVector.constant([F(1, 4), F(3, 4)])
    x = F(1, 2)
    # Oracle: 64 terms of the series; the tail is bounded by the running product.
    w = expand(x, 2)
    digits = w.digits(64)
    total, prod = F(0), F(1)
    for d in digits:
        total += prod * (F(0) if d == 0 else F(1, 4))
        prod *= (F(1, 4) if d == 0 else F(3, 4))
    got = F_eta(x, p)
    assert abs(got - total) <= prod
    assert got == F(1, 4)


def test_F_eta_boundaries_and_clamps():
    p = ProbabilityVector.constant([F(2, 5), F(3, 5)])
    assert F_eta(F(0), p) == 0
    assert F_eta(F(1), p) == 1
    assert F_eta(F(-3, 2), p) == 0
    assert F_eta(F(7, 2), p) == 1


def test_F_eta_representation_independent():
    rng = random.Random(55)
    from radixforge import dual_form
    from radixforge.analysis import _salem_sum
    for _ in range(60):
        p = _random_probs(rng, 2)
        m = rng.randint(1, 6)
        x = F(rng.randint(1, 2 ** m - 1), 2 ** m)
        w = expand(x, 2)
        d = dual_form(w)
        if d is not None:
            assert _salem_sum(w, p) == _salem_sum(d, p)


def _random_probs(rng, s):
    cuts = sorted(rng.randint(0, 64) for _ in range(s - 1))
    parts = []
    prev = 0
    for c in cuts:
        parts.append(F(c - prev, 64))
        prev = c
    parts.append(F(64 - prev, 64))
    return ProbabilityVector.constant(parts)


def test_F_eta_monotone_on_grid():
    rng = random.Random(56)
    grid = sorted(F(i, 256) for i in range(257))
    for _ in range(5):
        p = _random_probs(rng, 2)
        vals = [F_eta(x, p) for x in grid]
        assert all(a <= b for a, b in zip(vals, vals[1:]))
        assert vals[0] == 0 and vals[-1] == 1


def test_F_eta_degenerate_probabilities():
    p = ProbabilityVector.constant([F(1), F(0)])
    assert F_eta(F(1, 3), p) == 1
    assert F_eta(F(1, 2), p) == 1
    p2 = ProbabilityVector.constant([F(0), F(1)])
    assert F_eta(F(1, 2), p2) == 0


def test_F_eta_per_position_vectors():
    p = ProbabilityVector(2, (), ((F(1, 4), F(3, 4)), (F(1, 2), F(1, 2))))
    # digits of 1/3 are (01): per two positions the product ratio is
    # p_{0,odd} * p_{1,even} = 1/8, so F = (1/8) / (1 - 1/8); the direct
    # 60-term oracle below pins the same value.
    w = expand(F(1, 3), 2)
    digits = w.digits(60)
    total, prod = F(0), F(1)
    for n, d in enumerate(digits, start=1):
        vec = p.at(n)
        total += prod * (F(0) if d == 0 else vec[0])
        prod *= vec[d]
    got = F_eta(F(1, 3), p)
    assert abs(got - total) <= prod
    assert got == F(1, 7)


def test_F_eta_pseudo_digits_vs_plain():
    p = ProbabilityVector.constant([F(1, 4), F(3, 4)])
    sch = pair_lead_flip_schedule()
    assert F_eta(F(1, 2), p, sch) == f_D(F(1, 2), p, sch)
    assert F_eta(F(1, 2), p, identity_schedule()) == F_eta(F(1, 2), p)


def test_f_D_uniform_equals_value_map():
    p = ProbabilityVector.uniform(2)
    sch = pair_lead_flip_schedule()
    rng = random.Random(57)
    for _ in range(40):
        x = F(rng.randint(0, 97), 97)
        assert f_D(x, p, sch) == pseudo_value(x, sch)


def test_f_D_identity_schedule_is_F_eta():
    p = ProbabilityVector.constant([F(1, 3), F(2, 3)])
    rng = random.Random(58)
    for _ in range(30):
        x = F(rng.randint(0, 89), 89)
        assert f_D(x, p, identity_schedule()) == F_eta(x, p)


def test_f_D_complement_at_zero():
    p = ProbabilityVector.constant([F(1, 4), F(3, 4)])
    assert f_D(F(0), p, complement_schedule()) == 1


def test_f_D_two_path_agreement():
    rng = random.Random(59)
    for _ in range(60):
        sch = random_schedule(rng, s=2, max_k=2, max_pre=2, max_per=2)
        p = _random_probs(rng, 2)
        x = F(rng.randint(0, 181), 181)
        assert f_D(x, p, sch) == F_eta(pseudo_value(x, sch), p) == F_eta(x, p, sch)


def test_distribution_rows_shape():
    p = ProbabilityVector.uniform(2)
    rows = distribution_rows(p, None, 8)
    assert len(rows) == 9
    assert rows[0] == (F(0), F(0)) and rows[-1] == (F(1), F(1))
    with pytest.raises(ValueError):
        distribution_rows(p, None, 8, "g")
    with pytest.raises(ValueError):
        distribution_rows(p, None, 8, "fD")


def test_decimal_string():
    assert decimal_string(F(1, 4)) == "0.25"
    assert decimal_string(F(-1, 3), 5) == "-0.33333"
    assert decimal_string(F(2, 27), 6) == "0.074074"
