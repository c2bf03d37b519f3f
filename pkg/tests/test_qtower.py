import random
from fractions import Fraction

import pytest

from tritorsion.qtower import QuadNum, quad_sqrt, make_tower, squarefree_kernel
from tritorsion.errors import NotASquare, TowerDepthExceeded


def rand_elem(rng, tower):
    n = {0: 1, 1: 2, 2: 4}[len(tower)]
    coords = [Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(n)]
    return QuadNum(tower, coords)


def test_squarefree_kernel():
    assert squarefree_kernel(48) == (3, 4)
    assert squarefree_kernel(-4) == (-1, 2)
    assert squarefree_kernel(1) == (1, 1)
    assert squarefree_kernel(-45) == (-5, 3)


def test_quad_sqrt_examples():
    assert quad_sqrt(Fraction(49, 4)) == Fraction(7, 2)
    assert quad_sqrt(48) == 4 * QuadNum.sqrt_int(3)
    assert quad_sqrt(1) == 1
    with pytest.raises(NotASquare):
        quad_sqrt(QuadNum.sqrt_int(2) * 2)  # 2*sqrt(2) needs a quartic root


def test_quad_sqrt_in_and_out_of_tower():
    s2 = QuadNum.sqrt_int(2)
    assert quad_sqrt(3 + 2 * s2) == 1 + s2
    r = quad_sqrt(2 + QuadNum.sqrt_int(3))
    assert r * r == 2 + QuadNum.sqrt_int(3)
    u = 7 + 4 * QuadNum.sqrt_int(3)
    assert quad_sqrt(u) == 2 + QuadNum.sqrt_int(3)
    with pytest.raises(NotASquare):
        quad_sqrt(-3 - 2 * QuadNum.sqrt_int(3))


def test_field_axioms_random():
    rng = random.Random(7)
    for tower in [(), (2,), (-1,), (3, 5), (-1, 3)]:
        for _ in range(20):
            x, y, z = (rand_elem(rng, tower) for _ in range(3))
            assert (x + y) + z == x + (y + z)
            assert x * (y + z) == x * y + x * z
            assert (x * y) * z == x * (y * z)
            if not x.is_zero():
                assert x * x.inverse() == 1


def test_cross_tower_arithmetic():
    s3, s15 = QuadNum.sqrt_int(3), QuadNum.sqrt_int(15)
    p = s3 * s15
    assert p == 3 * QuadNum.sqrt_int(5)
    assert (7 + 4 * s3) * (4 + s15) == QuadNum((3, 5), [28, 16, 12, 7])
    with pytest.raises(TowerDepthExceeded):
        (1 + QuadNum.sqrt_int(2)) + QuadNum((3, 5), [0, 1, 1, 0])


def test_negative_radicands():
    i = QuadNum.sqrt_int(-1)
    assert i * i == -1
    assert (QuadNum.sqrt_int(-3) * i) == -QuadNum.sqrt_int(3)
    a = -1 + 2 * i
    assert a.norm() == 5
    assert (a * a.conjugate(0)) == 5


def test_norm_and_conjugates():
    u = 7 + 4 * QuadNum.sqrt_int(3)
    assert u.norm() == 1
    up = 4 + QuadNum.sqrt_int(15)
    assert up.norm() == 1
    m = u * up
    assert len(m.conjugates()) == 4
    assert m.norm() == 1


def test_tower_canonicalization():
    assert make_tower([3, 15]) == (3, 5)
    assert make_tower([8]) == (2,)
    assert make_tower([-1, -3]) == (-1, 3)  # Q(i, sqrt(-3)) = Q(i, sqrt(3))
    elem = QuadNum((3, 5), [1, 2, 0, 0])
    assert elem.tower == (3,)  # unused sqrt(5) axis dropped
