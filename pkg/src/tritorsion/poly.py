"""Dense univariate polynomials over an exact coefficient field or ring.

Coefficients may be Fraction, QuadNum, RatFunc, or Polynomial again (used as
"polynomial in b over Q[a]" in the elimination code).  Coefficients are kept
exactly; the zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _intgcd

import sympy as _sp

from .qtower import QuadNum, quad_sqrt
from .errors import NotASquare


def _as_coeff(c):
    return Fraction(c) if isinstance(c, int) else c


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_coeff(c) for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> Polynomial:
        return cls((c,))

    @classmethod
    def x(cls) -> Polynomial:
        return cls((Fraction(0), Fraction(1)))

    # -- basic structure ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def lc(self):
        if not self.coeffs:
            raise ValueError("leading coefficient of zero polynomial")
        return self.coeffs[-1]

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if _is_scalar(other):
            if _is_zero(other):
                return self.is_zero()
            return self.degree == 0 and self.coeffs[0] == _as_coeff(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        o = _coerce_poly(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other) and not isinstance(other, Polynomial):
            c = _as_coeff(other)
            return Polynomial([x * c for x in self.coeffs])
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [None] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if _is_zero(ca):
                continue
            for j, cb in enumerate(b):
                t = ca * cb
                out[i + j] = t if out[i + j] is None else out[i + j] + t
        return Polynomial([Fraction(0) if c is None else c for c in out])

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Polynomial.const(Fraction(1))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Division with remainder; coefficient field must support division."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        dlc = other.lc()
        while len(r) >= len(other.coeffs) and r:
            c = r[-1] / dlc
            k = len(r) - len(other.coeffs)
            q[k] = c
            for i, oc in enumerate(other.coeffs):
                r[k + i] = r[k + i] - c * oc
            while r and _is_zero(r[-1]):
                r.pop()
        return Polynomial(q), Polynomial(r)

    def __truediv__(self, other):
        if _is_scalar(other) and not isinstance(other, Polynomial):
            c = _as_coeff(other)
            return Polynomial([x / c for x in self.coeffs])
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __call__(self, x):
        """Horner evaluation at any value supporting the ring operations."""
        if not self.coeffs:
            return x * 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial([c * k for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        return self / self.lc()

    def shift(self, k: int) -> Polynomial:
        """Multiply by x**k."""
        if self.is_zero():
            return self
        return Polynomial((Fraction(0),) * k + self.coeffs)

    def compose(self, other: Polynomial) -> Polynomial:
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * other + Polynomial.const(c)
        return acc

    def reverse(self) -> Polynomial:
        return Polynomial(tuple(reversed(self.coeffs)))

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            term = f"{c}" if k == 0 else (f"{c}*x" if k == 1 else f"{c}*x^{k}")
            terms.append(term)
        return "Poly(" + " + ".join(terms) + ")"


def _is_scalar(v) -> bool:
    return isinstance(v, (int, Fraction, QuadNum, Polynomial)) or hasattr(v, "_tt_field")


def _is_zero(c) -> bool:
    if isinstance(c, Polynomial):
        return c.is_zero()
    z = c == 0
    return z if isinstance(z, bool) else False


def _coerce_poly(v):
    if isinstance(v, Polynomial):
        return v
    if _is_scalar(v):
        return Polynomial((_as_coeff(v),))
    return None


# -- gcd / content machinery over Q ---------------------------------------


def content_primitive(p: Polynomial) -> tuple[Fraction, Polynomial]:
    """p = content * primitive with integer primitive part, positive lc."""
    if p.is_zero():
        return Fraction(0), p
    num = 0
    den = 1
    for c in p.coeffs:
        num = _intgcd(num, c.numerator)
        den = den * c.denominator // _intgcd(den, c.denominator)
    cont = Fraction(num, den)
    if p.lc() < 0:
        cont = -cont
    return cont, p / cont


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd; primitive PRS over Z for Fraction coefficients."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if isinstance(f.lc(), Fraction) and isinstance(g.lc(), Fraction):
        _, a = content_primitive(f)
        _, b = content_primitive(g)
        while not b.is_zero():
            # pseudo-remainder keeps everything integral
            r = pseudo_rem(a, b)
            _, r = content_primitive(r) if not r.is_zero() else (Fraction(0), r)
            a, b = b, r
        return a.monic()
    a, b = f, g
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def pseudo_rem(f: Polynomial, g: Polynomial) -> Polynomial:
    """prem(f, g): lc(g)^(deg f - deg g + 1) * f mod g, division-free."""
    if g.is_zero():
        raise ZeroDivisionError
    d = f.degree - g.degree + 1
    if d <= 0:
        return f
    r = f
    lc = g.lc()
    for _ in range(d):
        if r.is_zero() or r.degree < g.degree:
            r = r * lc
            continue
        r = r * lc - g.shift(r.degree - g.degree) * r.lc()
    return r


def squarefree_part(p: Polynomial) -> Polynomial:
    if p.degree <= 1:
        return p.monic()
    return (p / gcd(p, p.derivative())).monic()


def _coeff_divexact(a, b):
    if isinstance(a, Polynomial) or isinstance(b, Polynomial):
        a = _coerce_poly(a)
        b = _coerce_poly(b)
        q, r = a.divmod(b)
        if not r.is_zero():
            raise ValueError("inexact coefficient division in PRS")
        return q
    return a / b


def resultant(f: Polynomial, g: Polynomial):
    """Resultant over any integral domain with exact division (Fraction,
    QuadNum, RatFunc, or Polynomial coefficients for bivariate elimination).

    Uses the pseudo-remainder sequence with the exact identity
    res(A,B) = (-1)^(mn) * lc(B)^(m - deg R - (m-n+1)n) * res(B,R),
    accumulating the positive and negative lc powers separately and doing a
    single exact division at the end.
    """
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    a, b = f, g
    sign = 1
    num = _as_coeff(1)
    den = _as_coeff(1)
    if a.degree < b.degree:
        if (a.degree % 2) and (b.degree % 2):
            sign = -sign
        a, b = b, a
    while True:
        m, n = a.degree, b.degree
        if n == 0:
            res = num * (b.lc() ** m)
            res = _coeff_divexact(res, den)
            return res if sign == 1 else -res
        r = pseudo_rem(a, b)
        if r.is_zero():
            return Fraction(0)
        if (m % 2) and (n % 2):
            sign = -sign
        e = m - r.degree - (m - n + 1) * n
        if e >= 0:
            num = num * (b.lc() ** e)
        else:
            den = den * (b.lc() ** (-e))
        a, b = b, r


def discriminant(p: Polynomial):
    """disc(p) = (-1)^(d(d-1)/2) * res(p, p') / lc(p)."""
    d = p.degree
    r = resultant(p, p.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * _coeff_divexact(r, p.lc())


# -- sympy bridges ----------------------------------------------------------

_X = _sp.Symbol("x")


def to_sympy(p: Polynomial):
    return _sp.Poly([_sp.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)], _X)


def from_sympy(sp_poly) -> Polynomial:
    cs = [Fraction(c.p, c.q) for c in reversed(sp_poly.all_coeffs())]
    return Polynomial(cs)


def factor_rational(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Irreducible factorization over Q (monic factors, content dropped)."""
    if p.degree <= 0:
        return []
    _, fl = _sp.factor_list(to_sympy(p))
    return [(from_sympy(f).monic(), m) for f, m in fl]


def isolating_intervals(p: Polynomial) -> list[tuple[Fraction, Fraction]]:
    """Certified isolating intervals for the real roots (sympy Sturm/VAS)."""
    out = []
    for item in to_sympy(p).intervals():
        (lo, hi), _mult = item
        out.append((Fraction(lo.p, lo.q), Fraction(hi.p, hi.q)))
    return out


# -- exact roots in quadratic towers ----------------------------------------


def tower_roots(p: Polynomial) -> tuple[list[QuadNum], list[Polynomial]]:
    """All roots of p lying in depth <= 2 quadratic towers, plus the
    irreducible factors whose roots lie outside every such tower."""
    roots: list[QuadNum] = []
    leftover: list[Polynomial] = []
    for fac, _m in factor_rational(p):
        d = fac.degree
        if d == 1:
            roots.append(QuadNum.from_rational(-fac[0]))
        elif d == 2:
            b, c = fac[1], fac[0]
            disc = b * b - 4 * c
            try:
                s = quad_sqrt(disc)
            except NotASquare:
                leftover.append(fac)
                continue
            half = Fraction(1, 2)
            roots.append((-b + s) * half)
            roots.append((-b - s) * half)
        elif d == 4:
            got = _quartic_tower_roots(fac)
            if got is None:
                leftover.append(fac)
            else:
                roots.extend(got)
        else:
            leftover.append(fac)
    return roots, leftover


def _quartic_tower_roots(fac: Polynomial) -> list[QuadNum] | None:
    """Roots of an irreducible quartic if its splitting data is biquadratic."""
    try:
        grp, _ = to_sympy(fac).galois_group()
    except Exception:
        return None
    if grp.order() != 4 or not grp.is_abelian or grp.is_cyclic:
        return None
    # V4: splits into quadratics over Q(sqrt(d)) for d | square part of disc
    disc = discriminant(fac)
    from .qtower import squarefree_kernel
    dker = squarefree_kernel(disc.numerator * disc.denominator)[0]
    for d in _quadratic_subfield_candidates(fac, dker):
        ext = _sp.sqrt(d)
        try:
            _, fl = _sp.factor_list(to_sympy(fac).as_expr(), extension=[ext])
        except Exception:
            continue
        quads = []
        ok = True
        for f, m in fl:
            fp = _sp.Poly(f, _X)
            if fp.degree() != 2:
                ok = False
                break
            quads.extend([fp] * m)
        if not ok or len(quads) != 2:
            continue
        roots = []
        try:
            for q in quads:
                cs = q.all_coeffs()
                lead = _sympy_to_quadnum(cs[0], d)
                b = _sympy_to_quadnum(cs[1], d) / lead
                c = _sympy_to_quadnum(cs[2], d) / lead
                s = quad_sqrt(b * b - 4 * c)
                roots.append((-b + s) / 2)
                roots.append((-b - s) / 2)
        except (NotASquare, Exception):
            continue
        if all(fac(r) == 0 for r in roots):
            return roots
    return None


def _quadratic_subfield_candidates(fac: Polynomial, dker: int) -> list[int]:
    cands = [] if dker in (0, 1) else [dker]
    # rational roots of the resolvent cubic give the V4 quadratic subfields
    a3, a2, a1, a0 = fac[3], fac[2], fac[1], fac[0]
    # depressed quartic y^4 + p y^2 + q y + r, x = y - a3/4
    p = a2 - Fraction(3, 8) * a3 * a3
    q = a1 - a3 * a2 / 2 + a3 ** 3 / 8
    r = a0 - a3 * a1 / 4 + a3 * a3 * a2 / 16 - 3 * a3 ** 4 / 256
    resolvent = Polynomial([4 * p * r - q * q, -4 * r, -p, Fraction(1)])
    from .qtower import squarefree_kernel
    for fct, _ in factor_rational(resolvent):
        if fct.degree == 1:
            theta = -fct[0]
            for val in (theta * theta - 4 * r, p - theta):
                if val != 0:
                    k = squarefree_kernel(val.numerator * val.denominator)[0]
                    if k != 1 and k not in cands:
                        cands.append(k)
    return cands


def _sympy_to_quadnum(expr, d: int) -> QuadNum:
    expr = _sp.expand(expr)
    rad = _sp.sqrt(d)
    c1 = expr.coeff(rad)
    c0 = _sp.expand(expr - c1 * rad)
    return QuadNum.from_rational(Fraction(int(_sp.numer(c0)), int(_sp.denom(c0)))) + \
        QuadNum.sqrt_int(d) * Fraction(int(_sp.numer(c1)), int(_sp.denom(c1)))
