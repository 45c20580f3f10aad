"""Named operators and schedules shipped with the library, plus pinned checks.

These are the worked examples the package reproduces end to end; the CLI's
``paper-fixtures`` subcommand runs `fixture_checks` and reports each line.
"""

from __future__ import annotations

from fractions import Fraction

from .analysis import continuity_classify, partition_integral
from .blockops import BlockOp, OperatorSchedule, complement_op, identity_op, op_order, perm_from_index
from .cylinders import Cylinder, adjacency_profile, children, image_of_cylinder, image_of_interval
from .representations import classify_point, nega_value, pseudo_value, quasi_bounds, transform
from .words import DigitWord, SignPattern, dual_form, evaluate, expand


def pair_lead_flip_op() -> BlockOp:
    """s=2, k=2: complement the first digit of each pair (00>10, 01>11, 10>00, 11>01)."""
    return BlockOp(2, 2, ((1, 0), (1, 1), (0, 0), (0, 1)))


def septenary_cycle_op() -> BlockOp:
    """s=7, k=1: the order-12 digit permutation 0>3, 1>5, 2>6, 3>4, 4>0, 5>2, 6>1."""
    return BlockOp(7, 1, ((3,), (5,), (6,), (4,), (0,), (2,), (1,)))


def ternary_swap_op() -> BlockOp:
    """s=3, k=1: fix 0, swap 1 and 2 (the index-1 single-digit permutation)."""
    return perm_from_index(3, 1, 1)


def pair_lead_flip_schedule() -> OperatorSchedule:
    return OperatorSchedule.constant(pair_lead_flip_op())


def septenary_cycle_schedule() -> OperatorSchedule:
    return OperatorSchedule.constant(septenary_cycle_op())


def ternary_swap_schedule() -> OperatorSchedule:
    return OperatorSchedule.constant(ternary_swap_op())


def identity_schedule(s: int = 2, k: int = 1) -> OperatorSchedule:
    return OperatorSchedule.constant(identity_op(s, k))


def complement_schedule(s: int = 2, k: int = 1) -> OperatorSchedule:
    return OperatorSchedule.constant(complement_op(s, k))


def negabinary_schedule() -> OperatorSchedule:
    """Complement on odd positions, identity on even: base -2 reading of binary digits."""
    return OperatorSchedule(2, (), (complement_op(2, 1), identity_op(2, 1)))


def named_schedules() -> dict[str, OperatorSchedule]:
    """The schedule files shipped in schedules/, by stem name."""
    return {
        "pairflip": pair_lead_flip_schedule(),
        "sevencycle": septenary_cycle_schedule(),
        "ternaryswap": ternary_swap_schedule(),
        "identity2": identity_schedule(),
        "complement2": complement_schedule(),
        "negabinary": negabinary_schedule(),
    }


def fixture_checks() -> list[tuple[str, bool, str]]:
    """Run every pinned worked example; (name, passed, detail) per check."""
    out: list[tuple[str, bool, str]] = []

    def check(name: str, got, expected) -> None:
        out.append((name, got == expected, f"expected {expected}, got {got}"))

    rows = [tuple(perm_from_index(3, 1, i).table[j][0] for j in range(3)) for i in range(6)]
    check("ternary single-digit operator table",
          rows, [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)])

    check("pair-lead-flip word rewrite",
          str(transform(DigitWord.parse("2:1110011001(11)"), pair_lead_flip_schedule())),
          "2:0100110011(01)")

    check("septenary cycle word rewrite",
          str(transform(DigitWord.parse("7:3455142(1)"), septenary_cycle_schedule())),
          "7:4022506(5)")
    check("septenary cycle operator order", op_order(septenary_cycle_op()), 12)

    sw = ternary_swap_schedule()
    check("ternary swap distance pair",
          (pseudo_value(Fraction(1, 3), sw), pseudo_value(Fraction(4, 9), sw)),
          (Fraction(2, 3), Fraction(8, 9)))

    check("terminating expansion of 2/27", str(expand(Fraction(2, 27), 3)), "3:002(0)")
    check("two expansions of 2/27",
          evaluate(dual_form(expand(Fraction(2, 27), 3))), Fraction(2, 27))

    img = image_of_interval(Fraction(2, 27), Fraction(4, 27), sw, 3)
    check("ternary swap image of [2/27, 4/27]",
          (img.intervals, img.points, img.measure),
          (((Fraction(1, 27), Fraction(2, 27)), (Fraction(6, 27), Fraction(7, 27))),
           (Fraction(5, 54), Fraction(8, 27)), Fraction(2, 27)))

    check("cylinder endpoints for base 002",
          Cylinder(3, (0, 0, 2)).interval, (Fraction(2, 27), Fraction(3, 27)))
    check("cylinder image 002 -> 001",
          image_of_cylinder(Cylinder(3, (0, 0, 2)), sw).base, (0, 0, 1))
    check("cylinder image 010 -> 020",
          image_of_cylinder(Cylinder(3, (0, 1, 0)), sw).base, (0, 2, 0))

    check("partition sums at one and three blocks",
          (partition_integral(identity_schedule(), 1), partition_integral(identity_schedule(), 3)),
          (Fraction(1, 4), Fraction(7, 16)))

    check("negabinary value of (10)",
          nega_value(DigitWord(2, (), (1, 0))), Fraction(-2, 3))
    check("odd-flagged value range",
          quasi_bounds(2, SignPattern.odd_positions()), (Fraction(-2, 3), Fraction(1, 3)))

    check("negabinary rank-1 cylinder order",
          adjacency_profile(negabinary_schedule(), 1).kind, "right-to-left")
    check("identity rank-3 cylinder order",
          adjacency_profile(identity_schedule(), 3).kind, "left-to-right")

    check("pair-lead-flip jump at 1/2",
          continuity_classify(Fraction(1, 2), pair_lead_flip_schedule()).jump, Fraction(2, 3))

    kids = children(Cylinder(2, (), pair_lead_flip_schedule()))
    check("rank-2 children of the k=2 system",
          (len(kids), {c.length for c in kids}), (4, {Fraction(1, 4)}))

    split = classify_point(Fraction(2, 27), sw)
    check("two images of 2/27 under the ternary swap",
          (split.values, split.equal), ((Fraction(1, 27), Fraction(5, 54)), False))

    return out
