from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopflab.errors import FieldMismatch, ParseError
from hopflab.scalars import QQ, CyclotomicField, PrimeField, field_from_name, field_from_spec

fractions = st.fractions(min_value=-100, max_value=100, max_denominator=50)


def test_rational_parse_and_format():
    assert QQ.parse("3/2") == Fraction(3, 2)
    assert QQ.fmt(QQ.parse("-7/14")) == "-1/2"


@pytest.mark.parametrize("bad", ["3//2", "", "1/0", "a"])
def test_malformed_rational(bad):
    with pytest.raises((ParseError, ZeroDivisionError)):
        QQ.parse(bad)


def test_gaussian_rationals():
    K = CyclotomicField(4)
    i = K.zeta
    assert i * i == K(-1)
    assert K.fmt(i * i + 1) == "0"
    assert K.parse("1+z^2") == K.zero
    assert K.parse(K.fmt(K.parse("2/3*z"))) == K.parse("2/3*z")


def test_rational_cyclotomic_compare():
    K = CyclotomicField(3)
    assert K(Fraction(-1, 3)) == Fraction(-1, 3)
    assert Fraction(-1, 3) == K(Fraction(-1, 3))
    assert K.zeta != Fraction(1)
    assert hash(K(Fraction(2, 5))) == hash(Fraction(2, 5))


def test_cyclotomic_inverse():
    K = CyclotomicField(3)
    z = K.zeta
    assert z ** 3 == K.one
    assert (1 + z) * (K.one / (1 + z)) == K.one


def test_prime_field():
    F = PrimeField(5)
    assert F(3) * F(2) == F(1)
    assert 1 / F(3) == F(2)
    assert F.parse("2 mod 5") == F(2)
    with pytest.raises(ZeroDivisionError):
        1 / F(0)
    with pytest.raises(ValueError):
        PrimeField(6)


def test_mixed_fields_refused():
    with pytest.raises(FieldMismatch):
        PrimeField(5)(1) + PrimeField(3)(1)
    with pytest.raises(FieldMismatch):
        CyclotomicField(4).zeta + CyclotomicField(3).zeta


def test_field_names():
    assert field_from_name("q") == QQ
    assert field_from_name("f3") == PrimeField(3)
    assert field_from_name("cyc4") == CyclotomicField(4)
    assert field_from_name("q(i)") == CyclotomicField(4)
    assert field_from_spec({"Fp": 7}) == PrimeField(7)
    with pytest.raises(ParseError):
        field_from_name("reals")


@given(fractions, fractions, fractions)
def test_cyclotomic_ring_axioms(a, b, c):
    K = CyclotomicField(5)
    z = K.zeta
    x, y, w = K(a) + z, K(b) * z * z + 1, K(c) - z ** 3
    assert (x * y) * w == x * (y * w)
    assert x * (y + w) == x * y + x * w
    if x != K.zero:
        assert x * (K.one / x) == K.one


@given(st.integers(0, 12), st.integers(1, 12))
def test_prime_field_division(a, b):
    F = PrimeField(13)
    assert (F(a) / F(b)) * F(b) == F(a)


@given(fractions)
def test_rational_roundtrip(q):
    assert QQ.parse(QQ.fmt(q)) == q
