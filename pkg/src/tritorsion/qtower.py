"""Quadratic tower arithmetic over Q.

Elements live in Q, Q(sqrt(d)) or Q(sqrt(d1), sqrt(d2)) for square-free
integers d, d1, d2 (negative allowed).  Towers are kept minimal and sorted,
so equality is structural.  Depth is capped at two adjoined square roots;
anything deeper raises TowerDepthExceeded.

Each basis symbol sqrt(d) denotes the principal square root (i*sqrt(|d|)
for d < 0), which fixes the product rule sqrt(a)*sqrt(b) = s*sqrt(k) with
ab = k*s**2, negated when a and b are both negative.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

import sympy as _sp

from .errors import NotASquare, TowerDepthExceeded

RatLike = int | Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


def squarefree_kernel(n: int) -> tuple[int, int]:
    """Write n = k * s**2 with k square-free, s > 0; return (k, s).  n != 0."""
    if n == 0:
        raise ValueError("kernel of 0")
    k, s = (-1 if n < 0 else 1), 1
    for p, e in _sp.factorint(abs(n)).items():
        if e % 2:
            k *= p
        s *= p ** (e // 2)
    return k, s


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None."""
    if x < 0:
        return None
    pn, pd = isqrt(x.numerator), isqrt(x.denominator)
    if pn * pn == x.numerator and pd * pd == x.denominator:
        return Fraction(pn, pd)
    return None


def _root_product(a: int, b: int) -> tuple[Fraction, int]:
    """sqrt(a)*sqrt(b) = scalar*sqrt(k) under the principal convention."""
    k, s = squarefree_kernel(a * b)
    if a < 0 and b < 0:
        s = -s
    return Fraction(s), k


def _tower_key(d: int) -> tuple[int, int]:
    return (abs(d), 0 if d > 0 else 1)


def make_tower(ds) -> tuple[int, ...]:
    """Canonical tower whose span contains sqrt(d) for every d in ds."""
    span = {1}
    for d in ds:
        span |= {squarefree_kernel(d * e)[0] for e in span}
    gens = sorted((d for d in span if d != 1), key=_tower_key)
    if len(gens) == 0:
        return ()
    if len(gens) == 1:
        return (gens[0],)
    if len(gens) == 3:
        return (gens[0], gens[1])
    raise TowerDepthExceeded(f"needs more than two square roots: {gens}")


def _basis(tower: tuple[int, ...]) -> tuple[int, ...]:
    if not tower:
        return (1,)
    if len(tower) == 1:
        return (1, tower[0])
    d1, d2 = tower
    _, k = _root_product(d1, d2)
    return (1, d1, d2, k)


class QuadNum:
    """Element of a quadratic tower, coordinates in the product-of-roots basis."""

    __slots__ = ("tower", "coords")

    def __init__(self, tower, coords, *, reduce: bool = True):
        tower = tuple(tower)
        coords = tuple(_frac(c) for c in coords)
        if reduce:
            tower, coords = _minimize(tower, coords)
        self.tower = tower
        self.coords = coords

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, x: RatLike) -> QuadNum:
        return cls((), (_frac(x),), reduce=False)

    @classmethod
    def sqrt_int(cls, d: int) -> QuadNum:
        """sqrt(d) of a nonzero integer, square part split off."""
        k, s = squarefree_kernel(d)
        if k == 1:
            return cls.from_rational(s)
        return cls((k,), (Fraction(0), Fraction(s)), reduce=False)

    # -- structure ----------------------------------------------------

    @property
    def depth(self) -> int:
        return len(self.tower)

    def is_rational(self) -> bool:
        return self.tower == ()

    def as_fraction(self) -> Fraction:
        if self.tower:
            raise ValueError(f"not rational: {self!r}")
        return self.coords[0]

    def is_zero(self) -> bool:
        return self.tower == () and self.coords[0] == 0

    def lift(self, tower: tuple[int, ...]) -> QuadNum:
        """Re-express inside a supertower (no reduction)."""
        if tower == self.tower:
            return self
        target = _basis(tower)
        coords = [Fraction(0)] * len(target)
        for c, rad in zip(self.coords, _basis(self.tower)):
            if c == 0:
                continue
            try:
                coords[target.index(rad)] = c
            except ValueError:
                raise TowerDepthExceeded(f"{self!r} does not embed in tower {tower}")
        return QuadNum(tower, coords, reduce=False)

    def conjugate(self, index: int) -> QuadNum:
        """Galois conjugate flipping the sign of the index-th tower root."""
        c = list(self.coords)
        if self.depth == 1:
            c[1] = -c[1]
        elif self.depth == 2:
            if index == 0:
                c[1], c[3] = -c[1], -c[3]
            else:
                c[2], c[3] = -c[2], -c[3]
        return QuadNum(self.tower, c, reduce=False)

    def conjugates(self) -> list[QuadNum]:
        out = [self]
        for i in range(self.depth):
            out += [x.conjugate(i) for x in out]
        return out

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        prod = QuadNum.from_rational(1)
        for c in self.conjugates():
            prod = prod * c
        return prod.as_fraction()

    # -- arithmetic ---------------------------------------------------

    def _pair(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadNum.from_rational(other)
        elif not isinstance(other, QuadNum):
            return None, None
        if self.tower == other.tower:
            return self, other
        tower = make_tower(self.tower + other.tower)
        return self.lift(tower), other.lift(tower)

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return QuadNum(a.tower, [x + y for x, y in zip(a.coords, b.coords)])

    __radd__ = __add__

    def __neg__(self) -> QuadNum:
        return QuadNum(self.tower, [-c for c in self.coords], reduce=False)

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return QuadNum(a.tower, [x - y for x, y in zip(a.coords, b.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        basis = _basis(a.tower)
        acc = [Fraction(0)] * len(basis)
        for i, ci in enumerate(a.coords):
            if ci == 0:
                continue
            for j, cj in enumerate(b.coords):
                if cj == 0:
                    continue
                if basis[i] == 1:
                    acc[j] += ci * cj
                elif basis[j] == 1:
                    acc[i] += ci * cj
                elif basis[i] == basis[j]:
                    acc[0] += ci * cj * basis[i]
                else:
                    s, k = _root_product(basis[i], basis[j])
                    acc[basis.index(k)] += ci * cj * s
        return QuadNum(a.tower, acc)

    __rmul__ = __mul__

    def inverse(self) -> QuadNum:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero tower element")
        cofactor = QuadNum.from_rational(1)
        for i, c in enumerate(self.conjugates()):
            if i:
                cofactor = cofactor * c
        n = (self * cofactor).as_fraction()
        return cofactor * (Fraction(1) / n)

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int) -> QuadNum:
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadNum.from_rational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.tower == () and self.coords[0] == other
        if not isinstance(other, QuadNum):
            return NotImplemented
        return self.tower == other.tower and self.coords == other.coords

    def __hash__(self):
        if self.tower == ():
            return hash(self.coords[0])
        return hash((self.tower, self.coords))

    def __repr__(self) -> str:
        if not self.tower:
            return f"QuadNum({self.coords[0]})"
        parts = []
        for c, rad in zip(self.coords, _basis(self.tower)):
            if c == 0:
                continue
            parts.append(str(c) if rad == 1 else f"({c})*sqrt({rad})")
        return "QuadNum(" + (" + ".join(parts) or "0") + ")"

    def evaluate(self, ctx, signs: tuple[int, ...] = ()):
        """Numeric value embedding sqrt(d_i) as signs[i] * principal sqrt."""
        signs = signs or (1,) * self.depth
        roots = {1: ctx.mpf(1)}
        for d, s in zip(self.tower, signs):
            roots[d] = s * ctx.sqrt(ctx.mpc(d))
        if self.depth == 2:
            d1, d2 = self.tower
            scal, k = _root_product(d1, d2)
            roots[k] = roots[d1] * roots[d2] * scal.denominator / scal.numerator
        tot = ctx.mpc(0)
        for c, rad in zip(self.coords, _basis(self.tower)):
            if c != 0:
                tot += ctx.mpf(c.numerator) / c.denominator * roots[rad]
        return tot


def _minimize(tower, coords):
    basis = _basis(tower)
    used = [rad for c, rad in zip(coords, basis) if c != 0 and rad != 1]
    new_tower = make_tower(used)
    if new_tower == tower:
        return tower, coords
    new_basis = _basis(new_tower)
    new_coords = [Fraction(0)] * len(new_basis)
    for c, rad in zip(coords, basis):
        if c != 0:
            new_coords[new_basis.index(rad)] = c
    return new_tower, tuple(new_coords)


def as_quadnum(x) -> QuadNum:
    if isinstance(x, QuadNum):
        return x
    return QuadNum.from_rational(_frac(x))


def quad_sqrt(x) -> QuadNum:
    """Square root of x (rational or QuadNum) inside a depth <= 2 tower.

    Stays in the existing tower when possible, else adjoins one new square
    root; raises NotASquare when depth 2 would not suffice.
    """
    x = as_quadnum(x)
    if x.is_zero():
        return QuadNum.from_rational(0)

    if x.is_rational():
        v = x.as_fraction()
        r = rational_sqrt(v)
        if r is not None:
            return QuadNum.from_rational(r)
        kn, sn = squarefree_kernel(v.numerator)
        kd, sd = squarefree_kernel(v.denominator)
        # sqrt(v) = (sn/(sd*kd)) * sqrt(kn*kd); kn*kd square-free up to gcd
        return QuadNum.sqrt_int(kn * kd) * Fraction(sn, sd * abs(kd))

    if x.depth == 1:
        d = x.tower[0]
        p, q = x.coords  # x = p + q*sqrt(d)
        nrm = p * p - d * q * q
        r = rational_sqrt(nrm) if nrm >= 0 else None
        if r is not None:
            for rr in {r, -r}:
                # in-tower: (u + v*sqrt(d))^2 = x with u^2 = (p+rr)/2
                u2 = (p + rr) / 2
                u = rational_sqrt(u2) if u2 >= 0 else None
                if u:
                    v = q / (2 * u)
                    cand = QuadNum((d,), (u, v))
                    if cand * cand == x:
                        return cand
            for rr in {r, -r}:
                # extended: sqrt(x) = (u + v*sqrt(d)) * sqrt(e), v^2*d*e = (p+rr)/2... derive e
                m = (p + rr) / (2 * d)
                if m == 0:
                    continue
                ke = squarefree_kernel(m.numerator * m.denominator)[0]
                v2 = m / ke
                v = rational_sqrt(v2) if v2 >= 0 else None
                if not v:
                    continue
                u = q / (2 * v * ke)
                cand = QuadNum((d,), (u, v)) * QuadNum.sqrt_int(ke)
                if cand * cand == x:
                    return cand
        raise NotASquare(f"{x!r} has no square root in a depth-2 tower")

    # depth 2: only an in-tower root can exist
    d1, d2 = x.tower
    scal, _ = _root_product(d1, d2)
    c0, c1, c2, c3 = x.coords
    # x = P + Q*sqrt(d2) with P, Q in Q(sqrt(d1)); c3*sqrt(k) = (c3/scal)*sqrt(d1)*sqrt(d2)
    P = QuadNum((d1,), (c0, c1), reduce=False)
    Q = QuadNum((d1,), (c2, c3 / scal))
    try:
        s = quad_sqrt(P * P - Q * Q * d2)
    except NotASquare:
        raise NotASquare(f"{x!r} has no square root in its own tower")
    if s.depth > 1 or (s.depth == 1 and s.tower != (d1,)):
        raise NotASquare(f"{x!r} has no square root in its own tower")
    for ss in (s, -s):
        half = (P + ss) * Fraction(1, 2)
        try:
            u = quad_sqrt(half)
        except NotASquare:
            continue
        if u.is_zero() or u.depth > 1 or (u.depth == 1 and u.tower != (d1,)):
            continue
        cand = u + (Q / (2 * u)) * QuadNum.sqrt_int(d2)
        if cand * cand == x:
            return cand
    raise NotASquare(f"{x!r} has no square root in its own tower")
