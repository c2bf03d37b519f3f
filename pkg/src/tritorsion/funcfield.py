"""The rational function field Q(t), its places, and quadratic extensions.

A Place is either a monic irreducible polynomial over Q or the place at
infinity; valuations are normalized surjective onto Z.  QuadFuncElem models
elements alpha + beta*sqrt(G) of a quadratic extension Q(t)(sqrt(G)), which
is all the extension arithmetic the height machinery needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

from .poly import Polynomial, factor_rational, gcd as poly_gcd
from .errors import TritorsionError

INF = math.inf


class RatFunc:
    """Element of Q(t): coprime numerator/denominator, denominator monic."""

    __slots__ = ("num", "den")
    _tt_field = True

    def __init__(self, num, den=None, *, reduce: bool = True):
        num = num if isinstance(num, Polynomial) else Polynomial.const(Fraction(num))
        den = den if den is not None else Polynomial.const(Fraction(1))
        den = den if isinstance(den, Polynomial) else Polynomial.const(Fraction(den))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in Q(t)")
        if num.is_zero():
            num, den = Polynomial(), Polynomial.const(Fraction(1))
        elif reduce:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num / g, den / g
            lc = den.lc()
            num, den = num / lc, den / lc
        self.num = num
        self.den = den

    @classmethod
    def t(cls) -> RatFunc:
        return cls(Polynomial.x())

    @classmethod
    def const(cls, c) -> RatFunc:
        return cls(Polynomial.const(Fraction(c)))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not constant: {self!r}")
        return self.num[0] / self.den[0] if not self.num.is_zero() else Fraction(0)

    def __call__(self, value):
        den = self.den(value)
        if den == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return self.num(value) / den

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other)
        if isinstance(other, Polynomial):
            return RatFunc(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero in Q(t)")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return (RatFunc.const(1) / self) ** (-n)
        out = RatFunc.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den == 1:
            return f"RatFunc({self.num!r})"
        return f"RatFunc({self.num!r} / {self.den!r})"


@dataclass(frozen=True)
class Place:
    """A place of Q(t): Finite(monic irreducible p(t)) or Infinity."""

    poly: Polynomial | None  # None encodes the place at infinity

    def __post_init__(self):
        if self.poly is not None:
            if self.poly.degree < 1 or self.poly.lc() != 1:
                raise ValueError("finite place needs a monic irreducible polynomial")

    @classmethod
    def infinity(cls) -> Place:
        return cls(None)

    @classmethod
    def finite(cls, poly: Polynomial) -> Place:
        return cls(poly.monic())

    @classmethod
    def at(cls, t0) -> Place:
        """The degree-1 place t - t0."""
        return cls(Polynomial([-Fraction(t0), Fraction(1)]))

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.degree

    def sort_key(self):
        if self.poly is None:
            return (1, ())
        return (0, (self.poly.degree,) + tuple(self.poly.coeffs))

    def __repr__(self):
        return "Place(inf)" if self.poly is None else f"Place({self.poly!r})"


def poly_valuation(p: Polynomial, q: Polynomial) -> int:
    """Multiplicity of the irreducible q in p (p nonzero)."""
    v = 0
    while True:
        quo, rem = p.divmod(q)
        if not rem.is_zero():
            return v
        p = quo
        v += 1


def valuation(f: RatFunc | Polynomial, place: Place) -> int | float:
    """ord_v(f); +inf exactly when f = 0."""
    if isinstance(f, Polynomial):
        f = RatFunc(f)
    if f.is_zero():
        return INF
    if place.is_infinite:
        return f.den.degree - f.num.degree
    return poly_valuation(f.num, place.poly) - poly_valuation(f.den, place.poly)


def finite_support(f: RatFunc) -> list[Place]:
    """Finite places where f has a zero or pole."""
    places = {}
    if f.is_zero():
        return []
    for part in (f.num, f.den):
        if part.degree > 0:
            for fac, _m in factor_rational(part):
                places[tuple(fac.coeffs)] = Place.finite(fac)
    return sorted(places.values(), key=Place.sort_key)


def divisor(f: RatFunc) -> list[tuple[Place, int]]:
    """Zero/pole divisor of f including infinity (empty for constants)."""
    if f.is_zero():
        raise ValueError("divisor of 0")
    out = []
    for pl in finite_support(f):
        out.append((pl, valuation(f, pl)))
    vinf = valuation(f, Place.infinity())
    if vinf != 0:
        out.append((Place.infinity(), vinf))
    return [(p, v) for p, v in out if v != 0]


class QuadFuncElem:
    """alpha + beta*sqrt(G) with alpha, beta in Q(t) and G a fixed non-square."""

    __slots__ = ("a", "b", "rad")
    _tt_field = True

    def __init__(self, a, b, rad: RatFunc):
        self.a = a if isinstance(a, RatFunc) else RatFunc.const(a) if isinstance(a, (int, Fraction)) else RatFunc(a)
        self.b = b if isinstance(b, RatFunc) else RatFunc.const(b) if isinstance(b, (int, Fraction)) else RatFunc(b)
        self.rad = rad

    @classmethod
    def sqrt_of(cls, rad: RatFunc) -> QuadFuncElem:
        return cls(RatFunc.const(0), RatFunc.const(1), rad)

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def in_base(self) -> bool:
        return self.b.is_zero()

    def base_part(self) -> RatFunc:
        if not self.in_base():
            raise ValueError("element has a sqrt component")
        return self.a

    def conj(self) -> QuadFuncElem:
        return QuadFuncElem(self.a, -self.b, self.rad)

    def norm_to_base(self) -> RatFunc:
        return self.a * self.a - self.b * self.b * self.rad

    def _coerce(self, other):
        if isinstance(other, QuadFuncElem):
            if other.rad == self.rad or other.b.is_zero() or self.b.is_zero():
                rad = self.rad if not self.b.is_zero() else other.rad
                return QuadFuncElem(other.a, other.b, rad)
            raise TritorsionError("mixed radicands in quadratic function extension")
        if isinstance(other, (int, Fraction, RatFunc, Polynomial)):
            return QuadFuncElem(other, RatFunc.const(0), self.rad)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadFuncElem(self.a + o.a, self.b + o.b, self.rad)

    __radd__ = __add__

    def __neg__(self):
        return QuadFuncElem(-self.a, -self.b, self.rad)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadFuncElem(self.a - o.a, self.b - o.b, self.rad)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadFuncElem(self.a * o.a + self.b * o.b * self.rad,
                            self.a * o.b + self.b * o.a, self.rad)

    __rmul__ = __mul__

    def inverse(self) -> QuadFuncElem:
        n = self.norm_to_base()
        if n.is_zero():
            raise ZeroDivisionError("inverse of zero (or radicand is a square)")
        return QuadFuncElem(self.a / n, -self.b / n, self.rad)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadFuncElem(RatFunc.const(1), RatFunc.const(0), self.rad)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, RatFunc, Polynomial)):
            return self.b.is_zero() and self.a == other
        if isinstance(other, QuadFuncElem):
            return self.a == other.a and self.b == other.b and (self.b.is_zero() or self.rad == other.rad)
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b if not self.b.is_zero() else None))

    def __repr__(self):
        return f"QuadFuncElem({self.a!r} + {self.b!r}*sqrt({self.rad!r}))"
