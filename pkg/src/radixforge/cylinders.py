"""Cylinder intervals of plain and digit-permuted base-s systems.

A cylinder fixes the first digits of the expansion; it is the closed interval
between the all-zero and all-(s-1) continuations and has length s^-rank.
Images of cylinders under the digit map are again cylinders of equal length,
which is what makes exact interval images and measure statements possible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .blockops import OperatorSchedule
from .representations import transform
from .words import DigitWord, evaluate, expansions


def base_digits_of(j: int, s: int, rank: int) -> tuple[int, ...]:
    """Digits of the rank-digit base whose cylinder starts at j / s^rank."""
    out = [0] * rank
    for i in range(rank - 1, -1, -1):
        j, out[i] = divmod(j, s)
    if j:
        raise ValueError("grid index out of range for the requested rank")
    return tuple(out)


@dataclass(frozen=True)
class Cylinder:
    """The set of points whose expansion starts with ``base``; a closed interval.

    With a schedule attached this is a cylinder of the digit-permuted system,
    whose rank must fall on a block boundary.
    """

    s: int
    base: tuple[int, ...]
    schedule: OperatorSchedule | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.s < 2:
            raise ValueError(f"base must be >= 2, got {self.s}")
        for d in self.base:
            if not 0 <= d < self.s:
                raise ValueError(f"digit {d} out of alphabet for base {self.s}")
        if self.schedule is not None:
            if self.schedule.s != self.s:
                raise ValueError("cylinder and schedule bases differ")
            if not self.schedule.is_boundary(self.rank):
                raise ValueError(f"rank {self.rank} is not a block boundary of the schedule")

    @property
    def rank(self) -> int:
        return len(self.base)

    @cached_property
    def lo(self) -> Fraction:
        return evaluate(DigitWord(self.s, self.base, (0,)))

    @cached_property
    def hi(self) -> Fraction:
        return evaluate(DigitWord(self.s, self.base, (self.s - 1,)))

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self.lo, self.hi

    @property
    def length(self) -> Fraction:
        return Fraction(1, self.s ** self.rank)


def cylinder_interval(base: tuple[int, ...], system: int | OperatorSchedule) -> Cylinder:
    """Cylinder for a digit base: plain when given a base int, schedule-ranked otherwise."""
    if isinstance(system, OperatorSchedule):
        return Cylinder(system.s, tuple(base), system)
    return Cylinder(int(system), tuple(base))


def children(c: Cylinder) -> list[Cylinder]:
    """The next-rank cylinders tiling c, left to right.

    Plain cylinders split into s children; schedule cylinders split at the
    next block boundary into s^k children, k the next block's length.
    """
    if c.schedule is None:
        return [Cylinder(c.s, c.base + (d,)) for d in range(c.s)]
    sch = c.schedule
    n = len(sch.blocks_covering(c.rank))
    k = sch.op_for_block(n + 1).k
    return [Cylinder(c.s, c.base + ext, sch)
            for ext in itertools.product(range(c.s), repeat=k)]


def image_of_cylinder(c: Cylinder, sch: OperatorSchedule) -> Cylinder:
    """Image of a plain block-boundary cylinder: the equal-length permuted cylinder."""
    if c.schedule is not None:
        raise ValueError("image_of_cylinder expects a plain base-s cylinder")
    if c.s != sch.s:
        raise ValueError("cylinder and schedule bases differ")
    return Cylinder(c.s, sch.apply_prefix(c.base), sch)


@dataclass(frozen=True)
class ImageSet:
    """Image of an interval: disjoint closed intervals plus isolated points.

    ``measure`` is the total length of the listed intervals.  ``inner`` and
    ``outer`` are certified bounds on the measure of the true image (equal to
    the source interval's length); when ``exact`` they coincide with it.
    """

    intervals: tuple[tuple[Fraction, Fraction], ...]
    points: tuple[Fraction, ...]
    measure: Fraction
    exact: bool
    inner: Fraction
    outer: Fraction

    def to_json(self) -> dict:
        obj = {
            "intervals": [[str(lo), str(hi)] for lo, hi in self.intervals],
            "points": [str(p) for p in self.points],
            "measure": str(self.measure),
            "exact": self.exact,
        }
        if not self.exact:
            obj["measure_bounds"] = [str(self.inner), str(self.outer)]
        return obj

    def covers(self, v: Fraction) -> bool:
        return any(lo <= v <= hi for lo, hi in self.intervals)


def _decompose(a: Fraction, b: Fraction, sch: OperatorSchedule, depth: int) -> list[Cylinder]:
    """Greedy maximal-cylinder tiling of [a, b]; a and b must sit on the depth grid."""
    boundaries = [r for r in sch.boundaries_upto(depth)]
    out = []
    cur = a
    while cur < b:
        for r in boundaries:
            step = Fraction(1, sch.s ** r)
            if (cur / step).denominator == 1 and cur + step <= b:
                j = cur / step
                out.append(Cylinder(sch.s, base_digits_of(int(j), sch.s, r)))
                cur += step
                break
        else:
            raise AssertionError("grid-aligned interval failed to tile")
    return out


def _merge(intervals: list[tuple[Fraction, Fraction]]) -> tuple[tuple[Fraction, Fraction], ...]:
    """Merge closed intervals that touch; inputs have disjoint interiors."""
    out: list[tuple[Fraction, Fraction]] = []
    for lo, hi in sorted(intervals):
        if out and lo <= out[-1][1]:
            out[-1] = (out[-1][0], max(out[-1][1], hi))
        else:
            out.append((lo, hi))
    return tuple(out)


def image_of_interval(a: Fraction | int, b: Fraction | int,
                      sch: OperatorSchedule, depth: int) -> ImageSet:
    """Image of [a, b] under the digit map, resolved at a block-boundary depth.

    When a and b sit on the s^-depth grid the result is exact: the interval
    tiles into maximal cylinders, each mapping to an equal-length cylinder,
    and the outward expansions of the two endpoints contribute isolated
    points whenever their images escape the interval union.  Off the grid the
    tiling of the bracketing grid intervals yields a certified superset with
    inner/outer measure bounds at most 2 * s^-depth apart.
    """
    a, b = Fraction(a), Fraction(b)
    if not 0 <= a < b <= 1:
        raise ValueError(f"need 0 <= a < b <= 1, got [{a}, {b}]")
    if depth < 1 or not sch.is_boundary(depth):
        raise ValueError(f"depth {depth} is not a positive block boundary of the schedule")
    g = Fraction(1, sch.s ** depth)
    a_lo, a_hi = (a // g) * g, -((-a) // g) * g
    b_lo, b_hi = (b // g) * g, -((-b) // g) * g
    exact = a_lo == a and b_lo == b

    cover = _decompose(a_lo, b_hi, sch, depth)
    intervals = _merge([image_of_cylinder(c, sch).interval for c in cover])

    # The cover catches every expansion except the two pointing outward: the
    # all-(s-1) tail of a and the terminating form of b.  Their images are
    # still image points of the closed interval, isolated when they escape.
    points = []
    for x, keep_tail_form in ((a, True), (b, False)):
        for w in expansions(x, sch.s):
            if (w.per != (0,)) != keep_tail_form:
                continue
            v = evaluate(transform(w, sch))
            if not any(lo <= v <= hi for lo, hi in intervals):
                points.append(v)
    points = tuple(sorted(set(points)))

    measure = sum((hi - lo for lo, hi in intervals), Fraction(0))
    if exact:
        return ImageSet(intervals, points, measure, True, b - a, b - a)
    return ImageSet(intervals, points, measure, False,
                    max(Fraction(0), b_lo - a_hi), b_hi - a_lo)


@dataclass(frozen=True)
class AdjacencyProfile:
    """How the rank-n image cylinders sit on the line, against input base order.

    ``image_ranks[j]`` is the left-to-right position of the image of the j-th
    input base; ``left_to_right`` lists input bases in image position order.
    """

    rank: int
    image_ranks: tuple[int, ...]
    left_to_right: tuple[int, ...]
    kind: str  # "left-to-right" | "right-to-left" | "mixed"

    def to_json(self) -> dict:
        return {"rank": self.rank, "image_ranks": list(self.image_ranks),
                "left_to_right": list(self.left_to_right), "kind": self.kind}


def adjacency_profile(sch: OperatorSchedule, n: int) -> AdjacencyProfile:
    """Ordering of the rank-n image cylinders; n must be a block boundary."""
    if n < 1 or not sch.is_boundary(n):
        raise ValueError(f"rank {n} is not a positive block boundary of the schedule")
    s = sch.s
    count = s ** n
    perm = []
    for j in range(count):
        img = sch.apply_prefix(base_digits_of(j, s, n))
        r = 0
        for d in img:
            r = r * s + d
        perm.append(r)
    inv = [0] * count
    for j, r in enumerate(perm):
        inv[r] = j
    if all(r == j for j, r in enumerate(perm)):
        kind = "left-to-right"
    elif all(r == count - 1 - j for j, r in enumerate(perm)):
        kind = "right-to-left"
    else:
        kind = "mixed"
    return AdjacencyProfile(n, tuple(perm), tuple(inv), kind)
