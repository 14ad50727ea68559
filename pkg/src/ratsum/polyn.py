"""Dense univariate polynomials over Q and rational functions of one variable.

``PolyN`` is a polynomial in the outer variable n with Fraction coefficients
(index = power of n, trailing zeros stripped, so the leading coefficient is
nonzero unless the polynomial is zero).  ``RatN`` is a reduced quotient of
two such polynomials with a monic denominator; it doubles as the coefficient
field Q(n) for polynomials in k and, with the variable read as nu or t, as
the scalar field of the summation engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .scalars import ONE, ZERO, Rat


def _strip(coeffs: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    i = len(coeffs)
    while i > 0 and coeffs[i - 1] == 0:
        i -= 1
    return coeffs[:i]


@dataclass(frozen=True)
class PolyN:
    """Polynomial in n over Q, dense ascending coefficients."""

    coeffs: tuple[Fraction, ...]

    # -- construction -----------------------------------------------------

    @staticmethod
    def make(values) -> "PolyN":
        return PolyN(_strip(tuple(Fraction(v) for v in values)))

    @staticmethod
    def const(v) -> "PolyN":
        return PolyN.make([Fraction(v)])

    @staticmethod
    def var() -> "PolyN":
        return PolyN.make([0, 1])

    @staticmethod
    def zero() -> "PolyN":
        return PolyN(())

    @staticmethod
    def one() -> "PolyN":
        return PolyN.make([1])

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with deg(0) = -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        if not self.coeffs:
            return ZERO
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return ZERO

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def const_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.coeffs[0] if self.coeffs else ZERO

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "PolyN") -> "PolyN":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return PolyN(_strip(tuple(out)))

    def __neg__(self) -> "PolyN":
        return PolyN(tuple(-v for v in self.coeffs))

    def __sub__(self, other: "PolyN") -> "PolyN":
        return self + (-other)

    def __mul__(self, other: "PolyN") -> "PolyN":
        if not self.coeffs or not other.coeffs:
            return PolyN.zero()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyN(_strip(tuple(out)))

    def scale(self, v) -> "PolyN":
        v = Fraction(v)
        if v == 0:
            return PolyN.zero()
        return PolyN(tuple(c * v for c in self.coeffs))

    def __pow__(self, e: int) -> "PolyN":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = PolyN.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod(self, other: "PolyN") -> tuple["PolyN", "PolyN"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [ZERO] * max(0, self.degree - other.degree + 1)
        rem = list(self.coeffs)
        d, lcb = other.degree, other.lc()
        while len(rem) - 1 >= d and any(v != 0 for v in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            f = rem[-1] / lcb
            shift = len(rem) - 1 - d
            q[shift] = f
            for i, v in enumerate(other.coeffs):
                rem[shift + i] -= f * v
            rem.pop()
        return PolyN(_strip(tuple(q))), PolyN(_strip(tuple(rem)))

    def divexact(self, other: "PolyN") -> "PolyN":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> "PolyN":
        if self.is_zero():
            return self
        return self.scale(1 / self.lc())

    def gcd(self, other: "PolyN") -> "PolyN":
        """Monic gcd over Q."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def lcm_poly(self, other: "PolyN") -> "PolyN":
        if self.is_zero() or other.is_zero():
            return PolyN.zero()
        return (self * other).divexact(self.gcd(other)).monic()

    # -- evaluation and substitution --------------------------------------

    def eval(self, x) -> Fraction:
        x = Fraction(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "PolyN") -> "PolyN":
        acc = PolyN.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + PolyN.const(c)
        return acc

    def compose_affine(self, p, q) -> "PolyN":
        """Substitute the variable by p*x + q."""
        return self.compose(PolyN.make([q, p]))

    # -- integer normalization ---------------------------------------------

    def primitive(self) -> tuple[Fraction, "PolyN"]:
        """Write self = content * prim with prim integer-primitive, lc > 0."""
        if self.is_zero():
            return ZERO, self
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        num = 0
        for c in self.coeffs:
            num = gcd(num, c.numerator * (den // c.denominator))
        content = Fraction(num, den)
        if self.lc() < 0:
            content = -content
        return content, self.scale(1 / content)

    # -- misc ----------------------------------------------------------------

    def key(self):
        return (self.degree, tuple(reversed(self.coeffs)))

    def __str__(self) -> str:
        return format_polyn(self, "n")

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"PolyN({format_polyn(self, 'n')})"


def format_polyn(p: PolyN, var: str) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeff(i)
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            v = var if i == 1 else f"{var}^{i}"
            body = v if abs(c) == 1 else f"{abs(c)}*{v}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts)


@dataclass(frozen=True)
class RatN:
    """Reduced rational function num/den with den monic and nonzero."""

    num: PolyN
    den: PolyN

    @staticmethod
    def make(num: PolyN, den: PolyN | None = None) -> "RatN":
        if den is None:
            den = PolyN.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return RatN(PolyN.zero(), PolyN.one())
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num.divexact(g), den.divexact(g)
        lc = den.lc()
        if lc != 1:
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        return RatN(num, den)

    @staticmethod
    def const(v) -> "RatN":
        return RatN.make(PolyN.const(v))

    @staticmethod
    def from_poly(p: PolyN) -> "RatN":
        return RatN.make(p)

    @staticmethod
    def var() -> "RatN":
        return RatN.make(PolyN.var())

    @staticmethod
    def zero() -> "RatN":
        return RatN.make(PolyN.zero())

    @staticmethod
    def one() -> "RatN":
        return RatN.make(PolyN.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def const_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.const_value()

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> PolyN:
        if not self.is_poly():
            raise ValueError("not a polynomial")
        return self.num

    def __add__(self, other: "RatN") -> "RatN":
        return RatN.make(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatN":
        return RatN(-self.num, self.den)

    def __sub__(self, other: "RatN") -> "RatN":
        return self + (-other)

    def __mul__(self, other: "RatN") -> "RatN":
        return RatN.make(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatN") -> "RatN":
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatN.make(self.num * other.den, self.den * other.num)

    def scale(self, v) -> "RatN":
        return RatN.make(self.num.scale(v), self.den)

    def __pow__(self, e: int) -> "RatN":
        if e < 0:
            return RatN.one() / self ** (-e)
        return RatN.make(self.num**e, self.den**e)

    def inv(self) -> "RatN":
        return RatN.one() / self

    def eval(self, x) -> Fraction:
        d = self.den.eval(x)
        if d == 0:
            raise ZeroDivisionError(f"pole of rational function at {x}")
        return self.num.eval(x) / d

    def compose_affine(self, p, q) -> "RatN":
        """Substitute the variable by p*x + q (p may be any rational, q too)."""
        return RatN.make(self.num.compose_affine(p, q), self.den.compose_affine(p, q))

    def poly_proper_split(self) -> tuple[PolyN, "RatN"]:
        """self = poly + proper with deg(num of proper) < deg(den)."""
        q, r = self.num.divmod(self.den)
        return q, RatN.make(r, self.den)

    def key(self):
        return (self.num.key(), self.den.key())

    def __str__(self) -> str:
        if self.is_poly():
            return format_polyn(self.num, "n")
        num = format_polyn(self.num, "n")
        den = format_polyn(self.den, "n")
        return f"({num})/({den})"

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"RatN({self})"
