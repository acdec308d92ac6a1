from fractions import Fraction

import pytest

from ecstats.intervals import QInterval, fraction_to_decimal, product, round_fraction


def test_point_and_validation():
    iv = QInterval.point(Fraction(1, 3))
    assert iv.lo == iv.hi == Fraction(1, 3)
    with pytest.raises(ValueError):
        QInterval(Fraction(1), Fraction(0))


def test_arithmetic_exact():
    a = QInterval(Fraction(1, 4), Fraction(1, 2))
    b = QInterval(Fraction(2), Fraction(3))
    assert (a + b) == QInterval(Fraction(9, 4), Fraction(7, 2))
    assert (a * b) == QInterval(Fraction(1, 2), Fraction(3, 2))
    assert (a * 2) == QInterval(Fraction(1, 2), Fraction(1))


def test_mul_with_negative_endpoints():
    a = QInterval(Fraction(-1), Fraction(2))
    b = QInterval(Fraction(-3), Fraction(1, 2))
    got = a * b
    assert got == QInterval(Fraction(-6), Fraction(3))


def test_reciprocal_and_division():
    a = QInterval(Fraction(2), Fraction(4))
    assert a.reciprocal() == QInterval(Fraction(1, 4), Fraction(1, 2))
    with pytest.raises(ZeroDivisionError):
        QInterval(Fraction(-1), Fraction(1)).reciprocal()
    assert (QInterval.point(1) / a) == a.reciprocal()


def test_contains_encloses_width():
    a = QInterval(Fraction(0), Fraction(1))
    assert a.contains(Fraction(1, 2)) and a.contains(0) and a.contains(1)
    assert not a.contains(Fraction(3, 2))
    assert a.encloses(QInterval(Fraction(1, 4), Fraction(3, 4)))
    assert not a.encloses(QInterval(Fraction(1, 4), Fraction(5, 4)))
    assert a.width == 1 and a.midpoint == Fraction(1, 2)


def test_product_helper():
    ivs = [QInterval.point(Fraction(1, 2)), QInterval(Fraction(1, 3), Fraction(2, 3))]
    assert product(ivs) == QInterval(Fraction(1, 6), Fraction(1, 3))


@pytest.mark.parametrize("q", [
    Fraction(1, 3), Fraction(-22, 7), Fraction(10**40 + 1, 3),
    Fraction(1, 10**30), Fraction(999999, 1000000), Fraction(0),
])
def test_round_fraction_is_directed(q):
    down = round_fraction(q, 10, up=False)
    up = round_fraction(q, 10, up=True)
    assert down <= q <= up
    if q != 0:
        assert up - down <= abs(q) * Fraction(1, 10**8)


def test_outward_rounding_preserves_enclosure():
    iv = QInterval(Fraction(1, 3), Fraction(2, 3))
    rounded = iv.outward_rounded(6)
    assert rounded.encloses(iv)


def test_fraction_to_decimal():
    assert fraction_to_decimal(Fraction(1, 8), 4) == "0.1250"
    assert fraction_to_decimal(Fraction(2, 3), 6) == "0.666667"
    assert fraction_to_decimal(Fraction(-1, 3), 3) == "-0.333"
    assert fraction_to_decimal(Fraction(32, 49)) == "0.653061224489796"
