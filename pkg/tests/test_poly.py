import random
from fractions import Fraction

import sympy as sp

from tritorsion.poly import (Polynomial, gcd, resultant, discriminant,
                             factor_rational, squarefree_part, tower_roots,
                             isolating_intervals, to_sympy)
from tritorsion.qtower import QuadNum


def rand_poly(rng, deg, bound=8):
    return Polynomial([Fraction(rng.randint(-bound, bound)) for _ in range(deg + 1)])


def test_basic_ops():
    x = Polynomial.x()
    p = (x - 1) * (x + 2)
    assert p == Polynomial([-2, 1, 1])
    q, r = (p * p + x).divmod(p)
    assert q * p + r == p * p + x
    assert p(3) == Fraction(10)
    assert p.derivative() == Polynomial([1, 2])


def test_gcd_matches_sympy():
    rng = random.Random(11)
    X = sp.Symbol("x")
    for _ in range(25):
        a, b, c = rand_poly(rng, 3), rand_poly(rng, 2), rand_poly(rng, 2)
        f, g = a * b, a * c
        if f.is_zero() or g.is_zero():
            continue
        ours = gcd(f, g)
        theirs = sp.gcd(to_sympy(f).as_expr(), to_sympy(g).as_expr())
        theirs = sp.Poly(theirs, X).monic()
        assert to_sympy(ours).monic() == theirs


def sylvester_det(f, g):
    """Sylvester-matrix determinant: the unambiguous resultant definition."""
    m, n = f.degree, g.degree
    fc = [sp.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)]
    gc = [sp.Rational(c.numerator, c.denominator) for c in reversed(g.coeffs)]
    rows = [[0] * i + fc + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + gc + [0] * (m - 1 - i) for i in range(m)]
    return Fraction(sp.Rational(sp.Matrix(rows).det()))


def test_resultant_matches_sylvester():
    rng = random.Random(5)
    for _ in range(25):
        f, g = rand_poly(rng, rng.randint(1, 5)), rand_poly(rng, rng.randint(1, 5))
        if f.is_zero() or g.is_zero() or f.degree < 1 or g.degree < 1:
            continue
        assert resultant(f, g) == sylvester_det(f, g)


def test_resultant_nested_bivariate():
    # res_b(b + (1+a), b + (8+2a)) = det [[1, 1+a], [1, 8+2a]] = 7 + a
    one_a = Polynomial([Fraction(1), Fraction(1)])       # 1 + a
    eight_2a = Polynomial([Fraction(8), Fraction(2)])    # 8 + 2a
    f = Polynomial([one_a, Polynomial.const(Fraction(1))])   # b + (1+a)
    g = Polynomial([eight_2a, Polynomial.const(Fraction(1))])
    r = resultant(f, g)
    assert r == Polynomial([7, 1])


def test_discriminant():
    x = Polynomial.x()
    # disc(x^2+bx+c) = b^2-4c
    p = x * x + 3 * x + 1
    assert discriminant(p) == Fraction(5)
    # disc(x^3+ax+b) = -4a^3-27b^2
    p = x ** 3 - x  # a=-1, b=0
    assert discriminant(p) == Fraction(4)


def test_factor_and_roots():
    x = Polynomial.x()
    p = (x - 2) * (x * x - 3) * (x * x + 1)
    roots, leftover = tower_roots(p)
    assert QuadNum.from_rational(2) in roots
    assert QuadNum.sqrt_int(3) in roots
    assert QuadNum.sqrt_int(-1) in roots
    assert leftover == []


def test_quartic_biquadratic_roots():
    # x^4 - 10x^2 + 1 has roots +-sqrt(2)+-sqrt(3)
    x = Polynomial.x()
    p = x ** 4 - 10 * x * x + 1
    roots, leftover = tower_roots(p)
    assert leftover == []
    assert len(roots) == 4
    cand = QuadNum.sqrt_int(2) + QuadNum.sqrt_int(3)
    assert cand in roots
    for r in roots:
        assert p(r) == 0


def test_quartic_nonbiquadratic_left():
    x = Polynomial.x()
    p = x ** 4 - 20 * x ** 3 - 26 * x * x - 20 * x + 1  # D4 Galois group
    roots, leftover = tower_roots(p)
    assert roots == []
    assert len(leftover) == 1 and leftover[0].degree == 4


def test_isolating_intervals():
    x = Polynomial.x()
    p = (x * x - 2) * (x - 5)
    ivs = isolating_intervals(p)
    assert len(ivs) == 3
    for lo, hi in ivs:
        assert lo <= hi


def test_squarefree_part():
    x = Polynomial.x()
    p = (x - 1) ** 3 * (x + 2)
    assert squarefree_part(p) == ((x - 1) * (x + 2)).monic()
