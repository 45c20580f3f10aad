"""Analytic behaviour of the digit map and its Salem-type distribution functions.

Continuity and monotonicity classification, distance non-preservation
witnesses, the exact partition integral, and the distribution function of a
random digit word with prescribed digit probabilities (plus its composition
with the digit map), all in exact rational arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .blockops import OperatorSchedule
from .representations import pseudo_value, transform
from .words import DigitWord, dual_form, evaluate, expand, is_base_rational

ENUMERATION_BOUND = 1 << 22  # above this many cylinders, fall back to the closed form


@dataclass(frozen=True)
class CumulativeOffsets:
    """Partial sums a_i = p_0 + ... + p_{i-1} of one probability vector; a_0 = 0."""

    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        v = self.values
        if not v or v[0] != 0:
            raise ValueError("offsets must start at a_0 = 0")
        if any(v[i] > v[i + 1] for i in range(len(v) - 1)) or v[-1] > 1:
            raise ValueError("offsets must be nondecreasing and at most 1")

    @classmethod
    def from_probabilities(cls, probs: tuple[Fraction, ...]) -> "CumulativeOffsets":
        out = [Fraction(0)]
        for p in probs[:-1]:
            out.append(out[-1] + p)
        return cls(tuple(out))


@dataclass(frozen=True)
class ProbabilityVector:
    """Digit probabilities, constant or eventually periodic per position.

    ``pre`` and ``per`` hold one length-s vector per position; each vector
    sums to exactly 1.
    """

    s: int
    pre: tuple[tuple[Fraction, ...], ...]
    per: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.s < 2:
            raise ValueError(f"base must be >= 2, got {self.s}")
        if not self.per:
            raise ValueError("probability period must be nonempty")
        for vec in (*self.pre, *self.per):
            if len(vec) != self.s:
                raise ValueError(f"probability vector {vec} must have {self.s} entries")
            if any(p < 0 or p > 1 for p in vec):
                raise ValueError(f"probabilities must lie in [0, 1], got {vec}")
            if sum(vec) != 1:
                raise ValueError(f"probabilities must sum to 1, got {vec}")

    @classmethod
    def constant(cls, probs) -> "ProbabilityVector":
        vec = tuple(Fraction(p) for p in probs)
        return cls(len(vec), (), (vec,))

    @classmethod
    def uniform(cls, s: int) -> "ProbabilityVector":
        return cls.constant([Fraction(1, s)] * s)

    def at(self, n: int) -> tuple[Fraction, ...]:
        """Probability vector at 1-indexed position n."""
        if n <= len(self.pre):
            return self.pre[n - 1]
        return self.per[(n - len(self.pre) - 1) % len(self.per)]

    def offsets_at(self, n: int) -> CumulativeOffsets:
        return CumulativeOffsets.from_probabilities(self.at(n))


def _salem_sum(w: DigitWord, p: ProbabilityVector) -> Fraction:
    """Sum of a_{d_n, n} * prod_{j<n} p_{d_j, j} over an eventually periodic word.

    Preperiod terms are summed directly; the periodic tail telescopes by the
    one-period probability product r.  r = 1 forces all offsets inside the
    period to vanish (the flagged digits then carry probability 1), so the
    tail is 0 there.
    """
    L = max(len(w.pre), len(p.pre))
    M = lcm(len(w.per), len(p.per))
    digits = w.digits(L + M)
    total = Fraction(0)
    prod = Fraction(1)
    for n in range(1, L + 1):
        d = digits[n - 1]
        total += prod * p.offsets_at(n).values[d]
        prod *= p.at(n)[d]
    S = Fraction(0)
    pp = Fraction(1)
    for m in range(1, M + 1):
        n = L + m
        d = digits[n - 1]
        S += pp * p.offsets_at(n).values[d]
        pp *= p.at(n)[d]
    if pp == 1:
        if S != 0:
            raise ValueError("divergent periodic tail: unit probability product with nonzero offsets")
        return total
    return total + prod * S / (1 - pp)


def F_eta(x: Fraction | int, p: ProbabilityVector,
          sch: OperatorSchedule | None = None) -> Fraction:
    """Distribution function of a random digit word with digit laws p, at x.

    Clamps to 0 below 0 and to 1 from 1 on.  Without a schedule the digits of
    x itself drive the sum; with one, the blockwise-rewritten digits do, so
    the clamp applies to the rewritten value (the digit map can move 1 off 1
    and other points onto it).  The result does not depend on which of the
    two expansions of a base-s rational is used.
    """
    x = Fraction(x)
    if x < 0:
        return Fraction(0)
    if sch is None:
        if x >= 1:
            return Fraction(1)
        w = expand(x, p.s)
    else:
        if sch.s != p.s:
            raise ValueError("schedule and probability bases differ")
        if x > 1:
            return Fraction(1)
        w = transform(expand(x, p.s), sch)
        if evaluate(w) == 1:
            return Fraction(1)
    return _salem_sum(w, p)


def f_D(x: Fraction | int, p: ProbabilityVector, sch: OperatorSchedule) -> Fraction:
    """Salem-type composition: the distribution function at the digit map's value."""
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    return F_eta(pseudo_value(x, sch), p)


@dataclass(frozen=True)
class Continuity:
    """One-sided limits of the digit map at a point, and the jump if any."""

    continuous: bool
    jump: Fraction | None = None
    left: Fraction | None = None
    right: Fraction | None = None

    def to_json(self) -> dict:
        if self.continuous:
            return {"continuous": True}
        return {"continuous": False, "jump": str(self.jump),
                "left": str(self.left), "right": str(self.right)}


def continuity_classify(x0: Fraction | int, sch: OperatorSchedule) -> Continuity:
    """Classify the digit map at x0: continuous, or a jump of computed size.

    Only base-s rationals can jump: the left limit is the image value of the
    all-(s-1)-tail expansion, the right limit that of the terminating one.
    """
    x0 = Fraction(x0)
    if not 0 <= x0 <= 1:
        raise ValueError(f"x0 must lie in [0, 1], got {x0}")
    if not is_base_rational(x0, sch.s):
        return Continuity(True)
    w = expand(x0, sch.s)
    right = evaluate(transform(w, sch))
    left = evaluate(transform(dual_form(w), sch))
    if left == right:
        return Continuity(True, None, left, right)
    return Continuity(False, abs(right - left), left, right)


@dataclass(frozen=True)
class Monotonicity:
    """Monotonicity class of the digit map, with a violating triple when mixed."""

    kind: str  # strictly-increasing | strictly-decreasing | piecewise-monotone | non-monotone
    witness: tuple[Fraction, Fraction, Fraction] | None = None

    def to_json(self) -> dict:
        obj = {"kind": self.kind}
        if self.witness is not None:
            obj["witness"] = [str(x) for x in self.witness]
        return obj


def monotonicity_scan(sch: OperatorSchedule, rank: int) -> Monotonicity:
    """Classify monotonicity from the schedule plus cylinder-order evidence.

    All-identity schedules give the identity map, all-complement ones give
    1 - x; a period of nothing but those two anchors leaves finitely many
    disturbed blocks, hence intervals of monotonicity.  Any other schedule is
    not monotone, witnessed by three cylinder midpoints found at the first
    non-anchor block (searched up to ``rank`` digits).
    """
    if rank < 1 or not sch.is_boundary(rank):
        raise ValueError(f"rank {rank} is not a positive block boundary of the schedule")
    if sch.all_identity:
        return Monotonicity("strictly-increasing")
    if sch.all_complement:
        return Monotonicity("strictly-decreasing")
    if sch.anchors_cofinitely:
        return Monotonicity("piecewise-monotone")
    return Monotonicity("non-monotone", _violating_triple(sch, rank))


def _violating_triple(sch: OperatorSchedule, rank: int):
    """Midpoint triple around the first non-anchor block where the order flips."""
    total, n = 0, 1
    while total < rank:
        op = sch.op_for_block(n)
        total += op.k
        if not (op.is_identity or op.is_complement):
            break
        n += 1
    else:
        return None
    # Children of the all-zero prefix at this boundary: their midpoints map in
    # the image order of the block table, which is neither sorted nor
    # reverse-sorted here, so a direction flip occurs at consecutive indices.
    s, K = sch.s, total
    group = s ** sch.op_for_block(n).k
    mids = [Fraction(2 * t + 1, 2 * s ** K) for t in range(group)]
    vals = [pseudo_value(m, sch) for m in mids]
    for t in range(group - 2):
        d1, d2 = vals[t + 1] - vals[t], vals[t + 2] - vals[t + 1]
        if (d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0):
            return (mids[t], mids[t + 1], mids[t + 2])
    return None


def distance_counterexample(sch: OperatorSchedule, rank: int):
    """First endpoint pair whose distance the digit map changes; None for the isometries.

    Scans block-boundary grids coarse to fine up to ``rank`` digits.  On each
    grid, adjacent endpoint pairs plus the pairs ending at 1 suffice: grid
    images differ from the grid by a permutation of the terminating-form
    values, and a permutation that preserves every adjacent gap is the
    identity or the reversal.  Only the all-identity and all-complement
    schedules (the maps x and 1-x) preserve every distance.
    """
    if rank < 1 or not sch.is_boundary(rank):
        raise ValueError(f"rank {rank} is not a positive block boundary of the schedule")
    if sch.all_identity or sch.all_complement:
        return None
    s = sch.s
    for r in sch.boundaries_upto(rank):
        count = s ** r
        pts = [Fraction(j, count) for j in range(count + 1)]
        vals = [pseudo_value(x, sch) for x in pts]
        for i in range(count):
            if abs(vals[i + 1] - vals[i]) != pts[i + 1] - pts[i]:
                return (pts[i], pts[i + 1])
        for i in range(count):
            if abs(vals[count] - vals[i]) != pts[count] - pts[i]:
                return (pts[i], pts[count])
    return None


def partition_integral(sch: OperatorSchedule, n: int) -> Fraction:
    """Partition sum of the digit map over all cylinders of the first n blocks.

    Each rank-K cylinder (K the n-th block boundary) contributes the infimum
    of its image cylinder times its length s^-K.  The image bases sweep all
    rank-K bases exactly once, so the sum is (s^K - 1) / (2 s^K) no matter
    the schedule; enumeration is used below ENUMERATION_BOUND cylinders and
    the closed form above it.
    """
    if n < 1:
        raise ValueError(f"need at least one block, got {n}")
    ops = []
    for m in range(1, n + 1):
        ops.append(sch.op_for_block(m))
    K = sum(op.k for op in ops)
    s = sch.s
    count = s ** K
    if count > ENUMERATION_BOUND:
        return Fraction(count - 1, 2 * count)
    maps = [op.rank_map for op in ops]
    sizes = [s ** op.k for op in ops]
    total = 0
    for combo in itertools.product(*(range(sz) for sz in sizes)):
        img = 0
        for mp, sz, c in zip(maps, sizes, combo):
            img = img * sz + mp[c]
        total += img
    return Fraction(total, count * count)


def distribution_rows(p: ProbabilityVector, sch: OperatorSchedule | None,
                      points: int, function: str = "F") -> list[tuple[Fraction, Fraction]]:
    """(x, value) rows of F_eta or f_D on the uniform grid i/points, i = 0..points."""
    if points < 1:
        raise ValueError("need at least one grid step")
    if function == "F":
        fn = lambda x: F_eta(x, p, sch)
    elif function == "fD":
        if sch is None:
            raise ValueError("fD requires a schedule")
        fn = lambda x: f_D(x, p, sch)
    else:
        raise ValueError(f"unknown function {function!r}, expected F or fD")
    return [(Fraction(i, points), fn(Fraction(i, points))) for i in range(points + 1)]


def decimal_string(x: Fraction, places: int = 12) -> str:
    """Deterministic truncated decimal rendering of an exact rational."""
    sign = "-" if x < 0 else ""
    x = abs(x)
    whole, rem = divmod(x.numerator, x.denominator)
    digits = []
    for _ in range(places):
        rem *= 10
        d, rem = divmod(rem, x.denominator)
        digits.append(str(d))
        if rem == 0:
            break
    return f"{sign}{whole}." + "".join(digits) if digits else f"{sign}{whole}"
