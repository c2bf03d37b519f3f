"""Truncated Laurent series with exact coefficients.

A series is sum_{k=0}^{K-1} coeffs[k] * q**(val+k) + O(q**(val+K)).
Coefficients are Fraction or QuadNum; the leading coefficient is nonzero
unless the series is zero to its truncation (empty coefficient list, with
`val` recording the O(q**val) precision bound).  Every operation computes
the tightest truncation the inputs justify and raises PrecisionExhausted if
no significant term would survive.
"""

from __future__ import annotations

from fractions import Fraction

from .qtower import QuadNum
from .errors import PrecisionExhausted, ZeroSeries


def _czero(c) -> bool:
    r = c == 0
    return r if isinstance(r, bool) else False


class LaurentSeries:
    __slots__ = ("val", "coeffs")

    def __init__(self, val: int, coeffs, *, normalize: bool = True):
        coeffs = list(coeffs)
        if normalize:
            # strip leading zeros (trailing zeros stay: they carry precision)
            while coeffs and _czero(coeffs[0]):
                coeffs.pop(0)
                val += 1
        self.val = val
        self.coeffs = tuple(Fraction(c) if isinstance(c, int) else c for c in coeffs)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, prec_order: int) -> LaurentSeries:
        """The zero series known to order O(q**prec_order)."""
        return cls(prec_order, ())

    @classmethod
    def const(cls, c, trunc: int) -> LaurentSeries:
        if _czero(c):
            return cls.zero(trunc)
        return cls(0, (c,) + (Fraction(0),) * (trunc - 1))

    @classmethod
    def unit(cls, trunc: int) -> LaurentSeries:
        """The series q with `trunc` retained terms."""
        return cls(1, (Fraction(1),) + (Fraction(0),) * (trunc - 1))

    @classmethod
    def from_coeff_map(cls, items: dict[int, object], prec_order: int) -> LaurentSeries:
        """Series with given exponent -> coefficient map, O(q**prec_order)."""
        nz = {k: v for k, v in items.items() if not _czero(v) and k < prec_order}
        if not nz:
            return cls.zero(prec_order)
        v0 = min(nz)
        coeffs = [nz.get(k, Fraction(0)) for k in range(v0, prec_order)]
        return cls(v0, coeffs)

    # -- structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def trunc(self) -> int:
        return len(self.coeffs)

    @property
    def prec_order(self) -> int:
        """The series is known modulo O(q**prec_order)."""
        return self.val + len(self.coeffs) if self.coeffs else self.val

    def valuation(self) -> int:
        if self.is_zero():
            raise ZeroSeries("valuation of a series that is zero to truncation")
        return self.val

    def coeff(self, k: int):
        """Coefficient of q**k (must be below the precision bound)."""
        if k >= self.prec_order:
            raise PrecisionExhausted(f"coefficient q^{k} beyond O(q^{self.prec_order})")
        if self.is_zero() or k < self.val:
            return Fraction(0)
        return self.coeffs[k - self.val]

    def leading(self):
        if self.is_zero():
            raise ZeroSeries("leading coefficient of zero series")
        return self.coeffs[0]

    def truncate_order(self, prec_order: int) -> LaurentSeries:
        """Forget terms at and beyond q**prec_order."""
        if prec_order > self.prec_order:
            raise PrecisionExhausted("cannot extend precision by truncation")
        if self.is_zero() or prec_order <= self.val:
            return LaurentSeries.zero(prec_order)
        return LaurentSeries(self.val, self.coeffs[: prec_order - self.val])

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, (int, Fraction, QuadNum)):
            # exact scalars carry unlimited precision; cap at our bound
            return _scalar_series(other, self.prec_order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prec = min(self.prec_order, o.prec_order)
        items: dict[int, object] = {}
        for s in (self, o):
            for k, c in enumerate(s.coeffs):
                e = s.val + k
                if e < prec:
                    items[e] = items.get(e, Fraction(0)) + c
        out = LaurentSeries.from_coeff_map(items, prec)
        return out

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.val, [-c for c in self.coeffs], normalize=False)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadNum)):
            if _czero(other):
                return LaurentSeries.zero(self.prec_order)
            return LaurentSeries(self.val, [c * other for c in self.coeffs], normalize=False)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            a_prec = self.prec_order + (other.val if other.coeffs else other.prec_order)
            b_prec = other.prec_order + (self.val if self.coeffs else self.prec_order)
            return LaurentSeries.zero(min(a_prec, b_prec))
        prec = min(self.prec_order + other.val, other.prec_order + self.val)
        v0 = self.val + other.val
        n = prec - v0
        if n < 1:
            raise PrecisionExhausted("no significant terms survive multiplication")
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if _czero(a) or i >= n:
                continue
            jmax = min(len(other.coeffs), n - i)
            for j in range(jmax):
                b = other.coeffs[j]
                if not _czero(b):
                    out[i + j] = out[i + j] + a * b
        return LaurentSeries(v0, out)

    __rmul__ = __mul__

    def inverse(self) -> LaurentSeries:
        """Series t with self*t = 1 + O(q**(v+K)); valuation(t) = -valuation(self)."""
        if self.is_zero():
            raise ZeroSeries("inverting a series that is zero to truncation")
        lead = self.coeffs[0]
        linv = Fraction(1) / lead if isinstance(lead, Fraction) else lead.inverse()
        n = len(self.coeffs)
        out = [linv] + [Fraction(0)] * (n - 1)
        for k in range(1, n):
            s = Fraction(0)
            for j in range(1, k + 1):
                cj = self.coeffs[j] if j < n else Fraction(0)
                if not _czero(cj):
                    s = s + cj * out[k - j]
            out[k] = -linv * s
        return LaurentSeries(-self.val, out)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, QuadNum)):
            inv = Fraction(1) / other if isinstance(other, (int, Fraction)) else other.inverse()
            return self * inv
        if isinstance(other, LaurentSeries):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return LaurentSeries.const(Fraction(1), max(1, self.trunc))
        out = None
        base = self
        while n:
            if n & 1:
                out = base if out is None else out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def compose(self, inner: LaurentSeries) -> LaurentSeries:
        """Substitute q -> inner (inner must have positive valuation).

        Only valid for self a power series (val >= 0) or with inner a unit
        multiple; computed by Horner on the retained terms.
        """
        if inner.is_zero():
            raise ZeroSeries("composition with zero series")
        if inner.valuation() < 1:
            raise ValueError("inner series must have positive valuation")
        if self.val < 0:
            # split off the principal part exactly
            tail = LaurentSeries(0, self.coeffs[-self.val:])
            inv = inner.inverse()
            acc = tail.compose(inner)
            for k in range(-self.val):
                c = self.coeffs[k]
                if not _czero(c):
                    acc = acc + inv ** (-self.val - k) * c
            return acc
        # Horner from the top coefficient down, then restore the q^val factor
        acc = _scalar_series(self.coeffs[-1] if self.coeffs else Fraction(0), inner.prec_order)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * inner + c
        if self.val > 0:
            acc = acc * inner ** self.val
        # truncation error of self is O(q^prec_order) -> O(inner^prec_order)
        bound = self.prec_order * inner.valuation()
        if acc.is_zero():
            return LaurentSeries.zero(min(bound, acc.prec_order))
        return acc.truncate_order(min(bound, acc.prec_order))

    def sqrt(self) -> LaurentSeries:
        """Square root with tower-extension of the leading coefficient."""
        from .qtower import quad_sqrt
        if self.is_zero():
            raise ZeroSeries("sqrt of zero series")
        if self.val % 2:
            raise ValueError("sqrt of odd valuation series is ramified")
        lead = self.coeffs[0]
        s0 = quad_sqrt(lead if isinstance(lead, QuadNum) else Fraction(lead))
        n = len(self.coeffs)
        ys = [s0.as_fraction() if s0.is_rational() else s0]
        for k in range(1, n):
            # coefficient k of y^2 must match coefficient k of the unit part
            s = Fraction(0)
            for j in range(1, k):
                s = s + ys[j] * ys[k - j]
            ys.append((self.coeffs[k] - s) / (2 * ys[0]))
        return LaurentSeries(self.val // 2, ys)

    def map_coeffs(self, fn) -> LaurentSeries:
        return LaurentSeries(self.val, [fn(c) for c in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, LaurentSeries):
            return self.val == other.val and self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self):
        if self.is_zero():
            return f"Laurent(O(q^{self.val}))"
        terms = [f"{c}*q^{self.val + k}" for k, c in enumerate(self.coeffs) if not _czero(c)]
        return "Laurent(" + " + ".join(terms) + f" + O(q^{self.prec_order}))"


def _scalar_series(c, prec_order: int) -> LaurentSeries:
    if _czero(c):
        return LaurentSeries.zero(prec_order)
    if prec_order < 1:
        raise PrecisionExhausted("scalar does not fit below precision bound")
    return LaurentSeries(0, [c] + [Fraction(0)] * (prec_order - 1))
