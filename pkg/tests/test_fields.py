from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewpencil.fields import QQ, FpElement, PrimeField, field_from_spec, fp_embed, rat_normalize

F101 = PrimeField(101)


def test_rat_normalize():
    assert rat_normalize(6, -4) == Fraction(-3, 2)
    r = rat_normalize(6, -4)
    assert (r.numerator, r.denominator) == (-3, 2)
    z = rat_normalize(0, 7)
    assert (z.numerator, z.denominator) == (0, 1)
    big = rat_normalize(2**64, 2)
    assert (big.numerator, big.denominator) == (2**63, 1)


def test_rat_zero_denominator():
    with pytest.raises(ZeroDivisionError, match="zero denominator"):
        rat_normalize(1, 0)


@pytest.mark.parametrize("x, expected", [(10, 3), (-1, 6), (7, 0)])
def test_fp_embed(x, expected):
    assert fp_embed(x, 7).value == expected


def test_fp_embed_rejects_composite():
    with pytest.raises(ValueError):
        fp_embed(3, 91)


def test_fp_arithmetic():
    a, b = F101(7), F101(100)
    assert a + b == 6
    assert a - b == 8
    assert a * b == 94
    assert (a / b) * b == a
    assert a * a.inverse() == 1
    assert -a == 94
    assert 1 - a == 95
    assert a**100 == 1
    with pytest.raises(ZeroDivisionError):
        F101(0).inverse()


def test_fp_mixed_moduli():
    with pytest.raises(ValueError):
        FpElement(1, 7) + FpElement(1, 11)


def test_serialization():
    assert QQ.format(Fraction(-3, 2)) == "-3/2"
    assert QQ.format(Fraction(3)) == "3"
    assert QQ.parse("-3/2") == Fraction(-3, 2)
    assert QQ.parse("−3/2") == Fraction(-3, 2)
    assert F101.format(F101(-1)) == "100 mod 101"
    assert F101.parse("100 mod 101") == F101(-1)
    assert F101.parse("1/2") * 2 == 1


def test_field_from_spec():
    assert field_from_spec("Q") is QQ
    assert field_from_spec("Fp:10007") == PrimeField(10007)
    with pytest.raises(ValueError):
        field_from_spec("Fp:10")
    with pytest.raises(ValueError):
        field_from_spec("R")


ints = st.integers(-(10**30), 10**30)
rats = st.builds(Fraction, ints, st.integers(1, 10**30))
fps = st.integers(0, 100).map(F101)


@pytest.mark.parametrize("elems", [rats, fps], ids=["Q", "F101"])
@settings(max_examples=1000)
@given(data=st.data())
def test_field_axioms(elems, data):
    a, b, c = data.draw(elems), data.draw(elems), data.draw(elems)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a != 0:
        assert a * (a ** -1) == 1


@given(st.integers(-(10**200), 10**200), st.integers(1, 10**200))
def test_rational_roundtrip_is_exact(num, den):
    x = rat_normalize(num, den)
    assert QQ.parse(QQ.format(x)) == x
    assert x * den == num
