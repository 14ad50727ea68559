"""Dense polynomials in k over the field Q(n).

This is the ring where partial-fraction denominators, their irreducible
factors, and affine substitutions k -> a*k + b*n + c live.  Coefficients are
``RatN`` values; the same machinery is reused by the summation engine with
the variables read as (nu, t) instead of (n, k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polyn import PolyN, RatN, format_polyn
from .scalars import Rat


def _strip(coeffs: tuple[RatN, ...]) -> tuple[RatN, ...]:
    i = len(coeffs)
    while i > 0 and coeffs[i - 1].is_zero():
        i -= 1
    return coeffs[:i]


@dataclass(frozen=True)
class PolyK:
    """Polynomial in k with RatN coefficients, dense ascending."""

    coeffs: tuple[RatN, ...]

    # -- construction -------------------------------------------------------

    @staticmethod
    def make(values) -> "PolyK":
        out = []
        for v in values:
            if isinstance(v, RatN):
                out.append(v)
            elif isinstance(v, PolyN):
                out.append(RatN.make(v))
            else:
                out.append(RatN.const(v))
        return PolyK(_strip(tuple(out)))

    @staticmethod
    def zero() -> "PolyK":
        return PolyK(())

    @staticmethod
    def one() -> "PolyK":
        return PolyK.make([1])

    @staticmethod
    def var() -> "PolyK":
        return PolyK.make([0, 1])

    @staticmethod
    def const(v) -> "PolyK":
        return PolyK.make([v])

    # -- structure ------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree in k, with deg(0) = -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> RatN:
        if not self.coeffs:
            return RatN.zero()
        return self.coeffs[-1]

    def coeff(self, i: int) -> RatN:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return RatN.zero()

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    # -- ring operations ------------------------------------------------------

    def __add__(self, other: "PolyK") -> "PolyK":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return PolyK(_strip(tuple(out)))

    def __neg__(self) -> "PolyK":
        return PolyK(tuple(-v for v in self.coeffs))

    def __sub__(self, other: "PolyK") -> "PolyK":
        return self + (-other)

    def __mul__(self, other: "PolyK") -> "PolyK":
        if self.is_zero() or other.is_zero():
            return PolyK.zero()
        out = [RatN.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return PolyK(_strip(tuple(out)))

    def scale(self, v: RatN) -> "PolyK":
        if v.is_zero():
            return PolyK.zero()
        return PolyK(tuple(c * v for c in self.coeffs))

    def __pow__(self, e: int) -> "PolyK":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = PolyK.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divrem(self, other: "PolyK") -> tuple["PolyK", "PolyK"]:
        """Quotient and remainder with deg_k(rem) < deg_k(other)."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        q = [RatN.zero()] * max(0, self.degree - other.degree + 1)
        rem = list(self.coeffs)
        d = other.degree
        inv_lc = other.lc().inv()
        while len(rem) - 1 >= d:
            while rem and rem[-1].is_zero():
                rem.pop()
            if len(rem) - 1 < d:
                break
            f = rem[-1] * inv_lc
            shift = len(rem) - 1 - d
            q[shift] = f
            for i, v in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - f * v
            rem.pop()
        return PolyK(_strip(tuple(q))), PolyK(_strip(tuple(rem)))

    def divexact(self, other: "PolyK") -> "PolyK":
        q, r = self.divrem(other)
        if not r.is_zero():
            raise ValueError("inexact division in Q(n)[k]")
        return q

    def monic(self) -> "PolyK":
        if self.is_zero():
            return self
        return self.scale(self.lc().inv())

    # -- gcd family -------------------------------------------------------------

    def gcd(self, other: "PolyK") -> "PolyK":
        """Monic gcd over the field Q(n)."""
        a, b = self, other
        if a.is_zero() and b.is_zero():
            raise ValueError("gcd(0, 0) undefined")
        while not b.is_zero():
            a, b = b, a.divrem(b)[1]
        return a.monic()

    def xgcd(self, other: "PolyK") -> tuple["PolyK", "PolyK", "PolyK"]:
        """(g, s, t) with s*self + t*other = g, g monic."""
        r0, r1 = self, other
        s0, s1 = PolyK.one(), PolyK.zero()
        t0, t1 = PolyK.zero(), PolyK.one()
        while not r1.is_zero():
            q, r = r0.divrem(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            raise ValueError("xgcd(0, 0) undefined")
        inv = r0.lc().inv()
        return r0.scale(inv), s0.scale(inv), t0.scale(inv)

    def derivative(self) -> "PolyK":
        return PolyK(
            _strip(tuple(c.scale(i) for i, c in enumerate(self.coeffs) if i > 0))
        )

    def squarefree_decomp(self) -> list[tuple["PolyK", int]]:
        """Yun decomposition: list of (part, multiplicity), parts monic,
        pairwise coprime and squarefree; the product of parts^mult equals the
        input up to a unit of Q(n)."""
        if self.is_zero():
            raise ValueError("squarefree decomposition of zero")
        f = self.monic()
        if f.degree < 1:
            return []
        df = f.derivative()
        a = f.gcd(df)
        b = f.divexact(a)
        c = df.divexact(a)
        d = c - b.derivative()
        out = []
        i = 1
        while b.degree >= 1:
            g = b.gcd(d)
            if g.degree >= 1:
                out.append((g.monic(), i))
            b2 = b.divexact(g)
            c2 = d.divexact(g)
            d = c2 - b2.derivative()
            b = b2
            i += 1
        return out

    # -- substitution -----------------------------------------------------------

    def compose(self, inner: "PolyK") -> "PolyK":
        """Substitute k by another polynomial in k."""
        acc = PolyK.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + PolyK((c,) if not c.is_zero() else ())
        return acc

    def apply_affine(self, a, b, c) -> "PolyK":
        """Return self(n, a*k + b*n + c) for rationals a, b, c (a != 0)."""
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        if a == 0:
            raise ValueError("affine substitution needs a != 0")
        shift = RatN.make(PolyN.make([c, b]))
        return self.compose(PolyK.make([shift, RatN.const(a)]))

    def eval_at(self, x: RatN) -> RatN:
        """Evaluate at k = x, an element of Q(n)."""
        acc = RatN.zero()
        for cf in reversed(self.coeffs):
            acc = acc * x + cf
        return acc

    def map_coeffs(self, fn) -> "PolyK":
        """Apply fn to every coefficient (used for n -> M*nu + rho rewrites)."""
        return PolyK(_strip(tuple(fn(c) for c in self.coeffs)))

    # -- canonical integral form ----------------------------------------------

    def canonicalize(self) -> tuple[RatN, "PolyK"]:
        """Write self = unit * canon with canon in Z[n][k], integer-primitive
        across all coefficients, trivial content in Z[n], and positive leading
        coefficient under the k-major term order."""
        from .scalars import rational_gcd

        if self.is_zero():
            raise ValueError("cannot canonicalize zero")
        den = PolyN.one()
        for cf in self.coeffs:
            den = den.lcm_poly(cf.den)
        polys = [cf.num * den.divexact(cf.den) for cf in self.coeffs]
        cont = PolyN.zero()
        for p in polys:
            if not p.is_zero():
                cont = p.monic() if cont.is_zero() else cont.gcd(p)
        polys = [p.divexact(cont) for p in polys]
        ic = rational_gcd(c for p in polys for c in p.coeffs)
        canon = PolyK(_strip(tuple(RatN.make(p.scale(1 / ic)) for p in polys)))
        scale = cont.scale(ic)
        if canon.lc().num.lc() < 0:
            canon = -canon
            scale = -scale
        return RatN.make(scale, den), canon

    # -- ordering / output --------------------------------------------------------

    def key(self):
        """Total order key: k-degree first, then coefficients from the top."""
        return (self.degree, tuple(self.coeff(i).key() for i in range(self.degree, -1, -1)))

    def __str__(self) -> str:
        return format_polyk(self)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"PolyK({format_polyk(self)})"


def format_polyk(p: PolyK, kvar: str = "k", nvar: str = "n") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeff(i)
        if c.is_zero():
            continue
        if i == 0:
            body = _coeff_str(c, nvar)
        else:
            kpart = kvar if i == 1 else f"{kvar}^{i}"
            if c.is_constant() and abs(c.const_value()) == 1:
                body = kpart
            else:
                body = f"{_coeff_str(c, nvar)}*{kpart}"
        neg = _sign_of(c) < 0
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


def _sign_of(c: RatN) -> int:
    return 1 if c.num.lc() > 0 else -1


def _coeff_str(c: RatN, nvar: str) -> str:
    if _sign_of(c) < 0:
        c = -c
    if c.is_poly():
        s = format_polyn(c.num, nvar)
        if c.num.degree > 0 and (len([v for v in c.num.coeffs if v != 0]) > 1):
            return f"({s})"
        return s
    return f"({format_polyn(c.num, nvar)})/({format_polyn(c.den, nvar)})"
