import random
from fractions import Fraction

import pytest

from tritorsion.laurent import LaurentSeries
from tritorsion.qtower import QuadNum
from tritorsion.errors import ZeroSeries, PrecisionExhausted


def series(val, coeffs):
    return LaurentSeries(val, [Fraction(c) for c in coeffs])


def test_invert_examples():
    one_minus_q = series(0, [1, -1, 0, 0])  # 1 - q, K=4
    inv = one_minus_q.inverse()
    assert inv == series(0, [1, 1, 1, 1])

    q = series(1, [1])
    assert q.inverse() == series(-1, [1])

    s = series(0, [2, 1, 0])  # 2 + q, K=3
    assert s.inverse() == series(0, [Fraction(1, 2), Fraction(-1, 4), Fraction(1, 8)])


def test_invert_roundtrip():
    rng = random.Random(2)
    for _ in range(20):
        val = rng.randint(-3, 3)
        coeffs = [Fraction(rng.randint(1, 5))] + [Fraction(rng.randint(-4, 4)) for _ in range(6)]
        s = LaurentSeries(val, coeffs)
        t = s.inverse().inverse()
        assert t.val == s.val
        assert t.coeffs == s.coeffs[: t.trunc]
        prod = s * s.inverse()
        assert prod.coeff(0) == 1
        assert all(c == 0 for c in prod.coeffs[1:])


def test_mul_precision_tracking():
    a = series(1, [1, 2, 3])      # q + 2q^2 + 3q^3 + O(q^4)
    b = series(0, [1, 1])         # 1 + q + O(q^2)
    p = a * b
    # product known only mod q^3: (q) * O(q^2) = O(q^3)
    assert p.prec_order == 3
    assert p == series(1, [1, 3])


def test_add_precision():
    a = series(0, [1, 1, 1, 1])
    b = series(2, [-1])
    s = a + b
    assert s.prec_order == 3
    assert s == series(0, [1, 1, 0])


def test_zero_series_and_errors():
    z = LaurentSeries.zero(5)
    assert z.is_zero()
    with pytest.raises(ZeroSeries):
        z.inverse()
    with pytest.raises(ZeroSeries):
        z.valuation()
    q = series(1, [1, 0, 0])
    assert (q + z).prec_order == 4  # limited by z's O(q^5) vs q's O(q^4)


def test_compose():
    # a(q) = q + q^2, inner = t^2 + t^3: a(inner) = t^2 + t^3 + t^4 + ...
    a = series(1, [1, 1])
    inner = series(2, [1, 1, 0, 0])
    c = a.compose(inner)
    assert c.val == 2
    assert c.coeff(2) == 1 and c.coeff(3) == 1


def test_sqrt():
    s = series(2, [4, 4, 1, 0, 0])  # 4q^2 + 4q^3 + q^4 = (2q + q^2)^2
    r = s.sqrt()
    assert r.val == 1 and r.coeffs[:2] == (Fraction(2), Fraction(1))
    assert (r * r).coeffs == s.truncate_order((r * r).prec_order).coeffs

    # tower leading coefficient
    s2 = series(0, [3, 1])
    r2 = s2.sqrt()
    assert r2.leading() == QuadNum.sqrt_int(3)
    prod = r2 * r2
    assert prod.coeff(0) == 3 and prod.coeff(1) == 1


def test_pow_and_scalar():
    q = series(1, [1, 0, 0, 0, 0, 0])
    p = (1 + q) ** 3
    assert [p.coeff(k) for k in range(4)] == [1, 3, 3, 1]
    assert (q * 5).coeff(1) == 5
