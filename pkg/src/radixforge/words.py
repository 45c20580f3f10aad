"""Eventually periodic digit words and exact base-s expansions.

A DigitWord stores a preperiod and a period of digits over {0, ..., s-1};
read as an infinite digit stream it is exactly the base-s expansion of a
rational number, and every rational in [0, 1] has such a word.  All values
are `fractions.Fraction`, so every computation in this package is exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm


class ParseError(ValueError):
    """Malformed textual or JSON input, as opposed to a domain violation."""


@dataclass(frozen=True)
class DigitWord:
    """Digits ``pre`` followed by ``per`` repeated forever, over base ``base``.

    The canonical form of a word (see `canonicalize`) has minimal period and
    minimal preperiod, prefers the terminating ``(0)`` tail for base-s
    rationals, and reserves the all-``(s-1)`` period for the value 1.
    """

    base: int
    pre: tuple[int, ...]
    per: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        if not self.per:
            raise ValueError("period must be nonempty")
        for d in (*self.pre, *self.per):
            if not isinstance(d, int) or not 0 <= d < self.base:
                raise ValueError(f"digit {d} out of alphabet for base {self.base}")

    def digit(self, n: int) -> int:
        """Digit at 1-indexed position n."""
        if n < 1:
            raise ValueError("digit positions are 1-indexed")
        if n <= len(self.pre):
            return self.pre[n - 1]
        return self.per[(n - len(self.pre) - 1) % len(self.per)]

    def digits(self, count: int) -> list[int]:
        """First ``count`` digits of the stream."""
        if count <= len(self.pre):
            return list(self.pre[:count])
        tail = count - len(self.pre)
        reps = -(-tail // len(self.per))
        return list(self.pre) + list(self.per * reps)[:tail]

    def __str__(self) -> str:
        sep = "" if self.base <= 10 else ","
        pre = sep.join(str(d) for d in self.pre)
        per = sep.join(str(d) for d in self.per)
        return f"{self.base}:{pre}({per})"

    @classmethod
    def parse(cls, text: str) -> "DigitWord":
        """Parse the ``base:pre(per)`` text form, digits comma-separated when base > 10."""
        m = re.fullmatch(r"(\d+):([0-9,]*)\(([0-9,]+)\)", text.strip())
        if not m:
            raise ParseError(f"malformed digit word {text!r}, expected base:pre(per)")
        base = int(m.group(1))
        if base < 2:
            raise ParseError(f"malformed digit word {text!r}: base must be >= 2")

        def read(chunk: str) -> tuple[int, ...]:
            if not chunk:
                return ()
            if "," in chunk:
                parts = [p for p in chunk.split(",") if p != ""]
            elif base <= 10:
                parts = list(chunk)
            else:
                parts = [chunk]
            return tuple(int(p) for p in parts)

        try:
            return cls(base, read(m.group(2)), read(m.group(3)))
        except ValueError as exc:
            raise ParseError(f"malformed digit word {text!r}: {exc}") from exc

    def to_json(self) -> dict:
        return {"s": self.base, "pre": list(self.pre), "per": list(self.per)}

    @classmethod
    def from_json(cls, obj: dict) -> "DigitWord":
        try:
            return cls(int(obj["s"]), tuple(int(d) for d in obj["pre"]),
                       tuple(int(d) for d in obj["per"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed digit word object {obj!r}: {exc}") from exc


@dataclass(frozen=True)
class SignPattern:
    """Eventually periodic membership word over the positive integers.

    Position n (1-indexed) is flagged iff n belongs to the underlying set;
    flagged positions carry sign -1 in the signed expansions.
    """

    pre: tuple[bool, ...]
    per: tuple[bool, ...]

    def __post_init__(self) -> None:
        if not self.per:
            raise ValueError("sign pattern period must be nonempty")

    def member(self, n: int) -> bool:
        if n < 1:
            raise ValueError("positions are 1-indexed")
        if n <= len(self.pre):
            return self.pre[n - 1]
        return self.per[(n - len(self.pre) - 1) % len(self.per)]

    @classmethod
    def odd_positions(cls) -> "SignPattern":
        return cls((), (True, False))

    @classmethod
    def even_positions(cls) -> "SignPattern":
        return cls((), (False, True))

    @classmethod
    def all_positions(cls) -> "SignPattern":
        return cls((), (True,))

    @classmethod
    def no_positions(cls) -> "SignPattern":
        return cls((), (False,))

    def __str__(self) -> str:
        pre = "".join("1" if f else "0" for f in self.pre)
        per = "".join("1" if f else "0" for f in self.per)
        return f"{pre}({per})"

    @classmethod
    def parse(cls, text: str) -> "SignPattern":
        """Parse ``pre(per)`` over {0,1}, or one of odd/even/all/none."""
        named = {
            "odd": cls.odd_positions, "even": cls.even_positions,
            "all": cls.all_positions, "none": cls.no_positions,
        }
        text = text.strip()
        if text in named:
            return named[text]()
        m = re.fullmatch(r"([01]*)\(([01]+)\)", text)
        if not m:
            raise ParseError(f"malformed sign pattern {text!r}, expected pre(per) over 0/1")
        return cls(tuple(c == "1" for c in m.group(1)),
                   tuple(c == "1" for c in m.group(2)))


def expand(x: Fraction | int, s: int) -> DigitWord:
    """Canonical base-s expansion of x in [0, 1].

    Long division with a remainder table for cycle detection; remainders live
    in {0, ..., denominator-1}, so the walk terminates and the first repeated
    remainder marks both the minimal preperiod and the minimal period.  Base-s
    rationals come out in the terminating ``(0)`` form; x = 1 is the single
    all-``(s-1)`` word.
    """
    if s < 2:
        raise ValueError(f"base must be >= 2, got {s}")
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    if x == 1:
        return DigitWord(s, (), (s - 1,))
    den = x.denominator
    digits: list[int] = []
    seen: dict[int, int] = {}
    r = x.numerator
    while r not in seen:
        seen[r] = len(digits)
        d, r = divmod(r * s, den)
        digits.append(d)
    start = seen[r]
    return DigitWord(s, tuple(digits[:start]), tuple(digits[start:]))


def evaluate(w: DigitWord) -> Fraction:
    """Exact value of a digit word: (P + Q/(s^M - 1)) / s^L.

    P and Q are the base-s integers read from the preperiod and the period,
    L and M their lengths.
    """
    s = w.base
    P = 0
    for d in w.pre:
        P = P * s + d
    Q = 0
    for d in w.per:
        Q = Q * s + d
    return (P + Fraction(Q, s ** len(w.per) - 1)) / s ** len(w.pre)


def canonicalize(w: DigitWord) -> DigitWord:
    """The unique canonical word with the same value; idempotent."""
    return expand(evaluate(w), w.base)


def is_base_rational(x: Fraction | int, s: int) -> bool:
    """True when x has two base-s expansions: x in (0, 1) with denominator dividing s^m."""
    x = Fraction(x)
    if not 0 < x < 1:
        return False
    d = x.denominator
    g = gcd(d, s)
    while g > 1:
        while d % g == 0:
            d //= g
        g = gcd(d, s)
    return d == 1


def dual_form(w: DigitWord) -> DigitWord | None:
    """The other expansion of the same value, or None when the expansion is unique.

    Only base-s rationals in (0, 1) have a second expansion: the canonical
    terminating word ``pre (0)`` pairs with ``pre' (s-1)`` where the last
    preperiod digit is lowered by one.  The input must be canonical.
    """
    if canonicalize(w) != w:
        raise ValueError("dual_form requires a canonical word")
    if w.per == (0,) and w.pre:
        return DigitWord(w.base, w.pre[:-1] + (w.pre[-1] - 1,), (w.base - 1,))
    return None


def expansions(x: Fraction | int, s: int) -> tuple[DigitWord, ...]:
    """All base-s expansions of x: the canonical one, plus the dual when it exists."""
    w = expand(x, s)
    d = dual_form(w)
    return (w,) if d is None else (w, d)


def align_lengths(*words: DigitWord | SignPattern) -> tuple[int, int]:
    """Common (preperiod, period) lengths for jointly periodic digit access."""
    L = max(len(w.pre) for w in words)
    M = lcm(*(len(w.per) for w in words))
    return L, M
