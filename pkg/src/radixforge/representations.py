"""Digit-level maps between numeral systems.

The central map rewrites a digit word blockwise through an operator schedule
(the digit-permuted system); around it sit the inverse rewriting, the induced
value map on [0, 1] with its two-expansion case analysis, and the signed
encodings: nega-base, sign-patterned quasi-nega, and variable-base series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .blockops import OperatorSchedule
from .words import (DigitWord, SignPattern, align_lengths, evaluate, expand,
                    expansions, is_base_rational)


def transform(w: DigitWord, sch: OperatorSchedule) -> DigitWord:
    """Rewrite w's digit stream blockwise through the schedule.

    The output keeps the structural alignment rather than being canonicalized:
    its preperiod covers K0 + c*Kp digits (K0/Kp the schedule's preperiod and
    period digit counts, c minimal so the input preperiod is covered) and its
    period is lcm(|w.per|, Kp) digits, so printed words match the blockwise
    rewriting digit for digit.
    """
    if w.base != sch.s:
        raise ValueError(f"word base {w.base} does not match schedule base {sch.s}")
    L, M = len(w.pre), len(w.per)
    K0, Kp = sch.pre_digits, sch.per_digits
    c = 0 if L <= K0 else -((K0 - L) // Kp)
    A = K0 + c * Kp
    P = lcm(M, Kp)
    digits = w.digits(A + P)
    out: list[int] = []
    pos, n = 0, 1
    while pos < A + P:
        op = sch.op_for_block(n)
        out.extend(op(tuple(digits[pos:pos + op.k])))
        pos += op.k
        n += 1
    return DigitWord(w.base, tuple(out[:A]), tuple(out[A:]))


def inverse_transform(w: DigitWord, sch: OperatorSchedule) -> DigitWord:
    """Undo transform blockwise; round-trips up to canonicalization."""
    return transform(w, sch.inverse())


def pseudo_value(x: Fraction | int, sch: OperatorSchedule) -> Fraction:
    """Value of the digit map at x, using x's canonical (terminating) expansion."""
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    return evaluate(transform(expand(x, sch.s), sch))


@dataclass(frozen=True)
class PointClassification:
    """How the digit map treats one point: its expansions, their images, and kinds."""

    x: Fraction
    kind: str                          # "s-rational" | "s-irrational"
    inputs: tuple[DigitWord, ...]
    images: tuple[DigitWord, ...]
    values: tuple[Fraction, ...]
    image_kinds: tuple[str, ...]       # "pseudo-rational" | "pseudo-irrational"
    equal: bool | None                 # None when x has a single expansion

    def to_json(self) -> dict:
        return {
            "x": str(self.x),
            "kind": self.kind,
            "inputs": [w.to_json() for w in self.inputs],
            "images": [w.to_json() for w in self.images],
            "values": [str(v) for v in self.values],
            "image_kinds": list(self.image_kinds),
            "equal": self.equal,
        }


def classify_point(x: Fraction | int, sch: OperatorSchedule) -> PointClassification:
    """Map every expansion of x and report whether the image values coincide.

    Base-s rationals contribute both expansions, realizing the two-image case
    split; all other x have a single expansion and a single image.  An image
    counts as pseudo-rational when its value again has two expansions, i.e.
    lies in (0, 1) with denominator dividing a power of s.
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    inputs = expansions(x, sch.s)
    images = tuple(transform(w, sch) for w in inputs)
    values = tuple(evaluate(w) for w in images)
    kinds = tuple("pseudo-rational" if is_base_rational(v, sch.s) else "pseudo-irrational"
                  for v in values)
    return PointClassification(
        x=x,
        kind="s-rational" if len(inputs) == 2 else "s-irrational",
        inputs=inputs,
        images=images,
        values=values,
        image_kinds=kinds,
        equal=(values[0] == values[1]) if len(values) == 2 else None,
    )


def preimages(y: Fraction | int, sch: OperatorSchedule) -> tuple[Fraction, ...]:
    """All x whose digit-map image (of some expansion) has value y; one or two points."""
    y = Fraction(y)
    if not 0 <= y <= 1:
        raise ValueError(f"y must lie in [0, 1], got {y}")
    found = {evaluate(inverse_transform(w, sch)) for w in expansions(y, sch.s)}
    return tuple(sorted(found))


def complement_on(w: DigitWord, pattern: SignPattern) -> DigitWord:
    """Replace digit a by s-1-a at flagged positions, keeping eventual periodicity."""
    L, M = align_lengths(w, pattern)
    digits = w.digits(L + M)
    flipped = tuple(w.base - 1 - d if pattern.member(n + 1) else d
                    for n, d in enumerate(digits))
    return DigitWord(w.base, flipped[:L], flipped[L:])


def complement_on_odd(w: DigitWord) -> DigitWord:
    return complement_on(w, SignPattern.odd_positions())


def nega_value(w: DigitWord) -> Fraction:
    """Value of w's digits read in base -s: sum of a_n / (-s)^n.

    Computed exactly by flipping odd positions and shifting: the flipped word
    evaluates to the nega value plus s/(s+1).
    """
    s = w.base
    return evaluate(complement_on_odd(w)) - Fraction(s, s + 1)


def _pattern_weight(s: int, pattern: SignPattern) -> Fraction:
    """Sum of (s-1)/s^n over flagged positions n, via the indicator word."""
    ind = DigitWord(s, tuple(s - 1 if f else 0 for f in pattern.pre),
                    tuple(s - 1 if f else 0 for f in pattern.per))
    return evaluate(ind)


def quasi_bounds(s: int, pattern: SignPattern) -> tuple[Fraction, Fraction]:
    """Value range [a0, 1 + a0] of the sign-patterned expansion; a0 = -sum over flagged positions."""
    if s < 2:
        raise ValueError(f"base must be >= 2, got {s}")
    a0 = -_pattern_weight(s, pattern)
    return a0, 1 + a0


def quasi_nega_value(w: DigitWord, pattern: SignPattern) -> Fraction:
    """Value of the sign-patterned expansion: sum of +-a_n / s^n, minus on flagged positions.

    Exact via the shift identity: flipping flagged digits turns the signed
    series into a plain base-s expansion offset by the pattern weight.
    """
    a0, _ = quasi_bounds(w.base, pattern)
    return evaluate(complement_on(w, pattern)) + a0


def quasi_nega_expand(x: Fraction | int, s: int, pattern: SignPattern) -> DigitWord:
    """Digit word of x in the sign-patterned system; inverts quasi_nega_value."""
    x = Fraction(x)
    a0, a1 = quasi_bounds(s, pattern)
    if not a0 <= x <= a1:
        raise ValueError(f"x must lie in [{a0}, {a1}], got {x}")
    return complement_on(expand(x - a0, s), pattern)


def _periodic_item(pre: tuple, per: tuple, n: int):
    return pre[n - 1] if n <= len(pre) else per[(n - len(pre) - 1) % len(per)]


def cantor_value(digit_pre: tuple[int, ...], digit_per: tuple[int, ...],
                 base_pre: tuple[int, ...], base_per: tuple[int, ...],
                 signs: SignPattern | None = None) -> Fraction:
    """Exact value of an (optionally signed) variable-base digit series.

    Term n contributes +-e_n / (q_1 ... q_n) with e_n < q_n; the minus sign
    applies on flagged positions.  Digits, bases, and signs are aligned on the
    lcm of their periods, and the periodic tail telescopes through the
    constant one-period ratio r = 1 / (product of q over one aligned period),
    which is < 1 since every q_n >= 2.
    """
    if not digit_per or not base_per:
        raise ValueError("digit and base periods must be nonempty")
    if signs is None:
        signs = SignPattern.no_positions()
    L = max(len(digit_pre), len(base_pre), len(signs.pre))
    M = lcm(len(digit_per), len(base_per), len(signs.per))

    def q(n: int) -> int:
        v = _periodic_item(base_pre, base_per, n)
        if v < 2:
            raise ValueError(f"base entry {v} at position {n} must be >= 2")
        return v

    def e(n: int) -> int:
        v = _periodic_item(digit_pre, digit_per, n)
        if not 0 <= v < q(n):
            raise ValueError(f"digit {v} at position {n} out of range for base {q(n)}")
        return v

    def sgn(n: int) -> int:
        return -1 if signs.member(n) else 1

    total = Fraction(0)
    prod = 1
    for n in range(1, L + 1):
        prod *= q(n)
        total += Fraction(sgn(n) * e(n), prod)
    contrib = Fraction(0)
    pp = 1
    for m in range(1, M + 1):
        n = L + m
        pp *= q(n)
        contrib += Fraction(sgn(n) * e(n), pp)
    r = Fraction(1, pp)
    return total + contrib / prod / (1 - r)
