import random
from decimal import Decimal, getcontext
from fractions import Fraction

import pytest

from nofil.surd import Surd, sign_root, sign_two_roots

getcontext().prec = 60


def dec(x: Surd) -> Decimal:
    r = Decimal(x.r.numerator) / Decimal(x.r.denominator)
    s = Decimal(x.s.numerator) / Decimal(x.s.denominator)
    return r + s * Decimal(x.d).sqrt()


def test_normalisation():
    assert Surd(0, 1, 16) == 4
    assert Surd(0, 1, 8).d == 2 and Surd(0, 1, 8).s == 2
    assert Surd.sqrt(Fraction(1, 4)) == Fraction(1, 2)
    assert Surd(3, 0, 7).d == 0
    assert hash(Surd(0, 1, 9)) == hash(Surd(3))


def test_arithmetic():
    a = Surd(1, 2, 5)
    assert a - a == 0
    assert a + 1 == Surd(2, 2, 5)
    assert (a * 3) == Surd(3, 6, 5)
    assert a / 2 == Surd(Fraction(1, 2), 1, 5)
    with pytest.raises(ValueError):
        Surd(0, 1, 2) + Surd(0, 1, 3)
    with pytest.raises(ValueError):
        Surd(-1, 0, -3)


def test_floor_ceil_on_exact_integers():
    assert Surd(0, 1, 49).floor() == 7
    assert Surd(Fraction(13, 2), Fraction(-1, 2), 9).ceil() == 5
    x = Surd(9, -1, 6)
    assert x.floor() == 6 and x.ceil() == 7


def test_signs_against_high_precision():
    rng = random.Random(0)
    for _ in range(3000):
        a = Fraction(rng.randint(-60, 60), rng.randint(1, 9))
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        p, q = rng.randint(0, 90), rng.randint(0, 90)
        exact = sign_two_roots(a, b, p, c, q)
        approx = Decimal(a.numerator) / a.denominator
        approx += Decimal(b.numerator) / b.denominator * Decimal(p).sqrt()
        approx += Decimal(c.numerator) / c.denominator * Decimal(q).sqrt()
        if abs(approx) > Decimal("1e-40"):
            assert exact == (1 if approx > 0 else -1)
        else:
            assert exact == 0


def test_single_root_sign():
    assert sign_root(3, -1, 9) == 0
    assert sign_root(3, -1, 10) == -1
    assert sign_root(-3, 1, 8) == -1


def test_ordering_and_rounding_match_decimal():
    rng = random.Random(1)
    values = [Surd(Fraction(rng.randint(-40, 40), rng.randint(1, 6)),
                   Fraction(rng.randint(-5, 5), rng.randint(1, 3)), rng.choice([2, 3, 5, 7, 11]))
              for _ in range(300)]
    for x in values:
        d = dec(x)
        assert x.floor() == int(d.to_integral_value(rounding="ROUND_FLOOR"))
        assert x.ceil() == int(d.to_integral_value(rounding="ROUND_CEILING"))
    for x, y in zip(values, values[1:]):
        assert (x < y) == (dec(x) < dec(y))
