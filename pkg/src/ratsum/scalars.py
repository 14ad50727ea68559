"""Exact rational scalar helpers.

Scalars throughout the package are arbitrary-precision rationals backed by
``fractions.Fraction`` (always reduced, positive denominator, zero is 0/1).
This module adds the handful of operations the rest of the code needs on
top of the stdlib: rational gcd/lcm and exact n-th roots.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rational_gcd(values) -> Fraction:
    """gcd of rationals: gcd(a/b, c/d) = gcd(a, c) / lcm(b, d).

    The result is the largest positive rational dividing every input
    (x divides y when y/x is an integer).  gcd of an empty list is 0.
    """
    num, den = 0, 1
    for v in values:
        v = Fraction(v)
        num = gcd(num, v.numerator)
        den = lcm(den, v.denominator)
    return Fraction(num, den)


def rational_lcm(values) -> Fraction:
    """lcm of nonzero rationals: lcm(a/b, c/d) = lcm(a, c) / gcd(b, d)."""
    num, den = 1, 0
    for v in values:
        v = Fraction(v)
        if v == 0:
            raise ValueError("lcm of zero")
        num = lcm(num, abs(v.numerator))
        den = gcd(den, v.denominator)
    return Fraction(num, den)


def int_nth_root(a: int, n: int) -> int | None:
    """Exact integer n-th root of a >= 0, or None if a is not a perfect power."""
    if a < 0 or n < 1:
        raise ValueError("int_nth_root needs a >= 0, n >= 1")
    if n == 1 or a in (0, 1):
        return a
    if n == 2:
        r = isqrt(a)
        return r if r * r == a else None
    lo, hi = 0, 1
    while hi**n <= a:
        hi *= 2
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**n <= a:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo**n == a else None


def rat_nth_root(x: Fraction, n: int) -> Fraction | None:
    """Exact rational n-th root of x, or None.

    For even n the argument must be nonnegative and the nonnegative root is
    returned; for odd n the sign is carried through.
    """
    if n < 1:
        raise ValueError("root order must be positive")
    neg = x < 0
    if neg and n % 2 == 0:
        return None
    x = abs(x)
    p = int_nth_root(x.numerator, n)
    if p is None:
        return None
    q = int_nth_root(x.denominator, n)
    if q is None:
        return None
    r = Fraction(p, q)
    return -r if neg else r
