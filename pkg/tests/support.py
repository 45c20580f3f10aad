"""Shared randomized generators and independent oracles for the test suite."""

from __future__ import annotations

from fractions import Fraction
from math import factorial, lcm

from radixforge import DigitWord, OperatorSchedule, perm_from_index


def random_op(rng, s, k):
    return perm_from_index(s, k, rng.randrange(factorial(s ** k)))


def random_schedule(rng, s=2, max_k=3, max_pre=3, max_per=3):
    pre = tuple(random_op(rng, s, rng.randint(1, max_k))
                for _ in range(rng.randint(0, max_pre)))
    per = tuple(random_op(rng, s, rng.randint(1, max_k))
                for _ in range(rng.randint(1, max_per)))
    return OperatorSchedule(s, pre, per)


def random_word(rng, s, max_pre=6, max_per=4):
    pre = tuple(rng.randrange(s) for _ in range(rng.randint(0, max_pre)))
    per = tuple(rng.randrange(s) for _ in range(rng.randint(1, max_per)))
    return DigitWord(s, pre, per)


def random_fraction(rng, max_den=1000):
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(0, den), den)


def partial_sum(w: DigitWord, count: int) -> Fraction:
    """Truncated series sum of digit_n / s^n; the convergence oracle for evaluate."""
    return sum((Fraction(d, w.base ** (n + 1)) for n, d in enumerate(w.digits(count))),
               Fraction(0))


def signed_series_value(w: DigitWord, pattern) -> Fraction:
    """Independent oracle for the signed expansions: telescoped sum of +-a_n / s^n."""
    L = max(len(w.pre), len(pattern.pre))
    M = lcm(len(w.per), len(pattern.per))
    digits = w.digits(L + M)
    s = w.base
    total = Fraction(0)
    for n in range(1, L + 1):
        sign = -1 if pattern.member(n) else 1
        total += Fraction(sign * digits[n - 1], s ** n)
    block = Fraction(0)
    for m in range(1, M + 1):
        sign = -1 if pattern.member(L + m) else 1
        block += Fraction(sign * digits[L + m - 1], s ** m)
    return total + Fraction(1, s ** L) * block / (1 - Fraction(1, s ** M))


def first_boundary_at_least(sch: OperatorSchedule, m: int) -> tuple[int, int]:
    """(K_n, K_{n-1}) for the first block boundary K_n >= m."""
    total, n, prev = 0, 0, 0
    while total < m:
        n += 1
        prev = total
        total += sch.op_for_block(n).k
    return total, prev
