from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from drazinlab.errors import DivisionByZero, FieldMismatch, ParseError, ZeroDenominator
from drazinlab.scalar import QQ, FieldTag, Scalar, field_arith, field_inverse, normalize_rational, parse_scalar


def test_normalize_reduces():
    assert normalize_rational(2, 4).value == Fraction(1, 2)
    assert str(normalize_rational(2, 4)) == "1/2"


def test_normalize_sign():
    x = normalize_rational(3, -6)
    assert (x.value.numerator, x.value.denominator) == (-1, 2)


def test_normalize_zero():
    x = normalize_rational(0, 7)
    assert (x.value.numerator, x.value.denominator) == (0, 1)


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        normalize_rational(1, 0)


def test_field_arith_examples():
    assert field_arith("add", normalize_rational(1, 2), normalize_rational(1, 3)) == normalize_rational(5, 6)
    gf5 = FieldTag.gf(5)
    assert field_arith("mul", Scalar(gf5, 3), Scalar(gf5, 4)).value == 2
    x = Scalar(gf5, 3)
    assert not field_arith("sub", x, x)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        field_arith("add", Scalar(QQ, 1), Scalar(FieldTag.gf(3), 1))


def test_field_inverse_examples():
    assert field_inverse(Scalar(FieldTag.gf(7), 3)).value == 5
    assert field_inverse(normalize_rational(-2, 3)) == normalize_rational(-3, 2)
    for F in (QQ, FieldTag.gf(2), FieldTag.gf(13)):
        assert field_inverse(Scalar(F, 1)) == Scalar(F, 1)


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        field_inverse(Scalar(FieldTag.gf(5), 0))
    with pytest.raises(ZeroDivisionError):
        field_inverse(Scalar(QQ, 0))


@pytest.mark.parametrize("p", [1, 4, 9, 91, 2**31 - 2, 2**31 + 11])
def test_bad_moduli_rejected(p):
    with pytest.raises(ValueError):
        FieldTag.gf(p)


def test_largest_allowed_modulus():
    assert FieldTag.gf(2**31 - 1).modulus == 2**31 - 1


@pytest.mark.parametrize("text,expected", [("q", QQ), ("gf:7", FieldTag.gf(7)), (" GF:2 ", FieldTag.gf(2))])
def test_field_tag_parse(text, expected):
    assert FieldTag.parse(text) == expected
    assert FieldTag.parse(str(expected)) == expected


@pytest.mark.parametrize("text", ["r", "gf:", "gf:6", "gf:x", "z/5"])
def test_field_tag_parse_errors(text):
    with pytest.raises(ParseError):
        FieldTag.parse(text)


def test_scalar_text_format():
    assert str(parse_scalar("3/-6", QQ)) == "-1/2"
    assert str(parse_scalar("-4", QQ)) == "-4"
    assert str(parse_scalar("12", FieldTag.gf(5))) == "2"
    with pytest.raises(ParseError):
        parse_scalar("1/0", QQ)
    with pytest.raises(ParseError):
        parse_scalar("1.5", QQ)


rationals = st.fractions(max_denominator=10**6).filter(lambda f: abs(f.numerator) < 10**9)
PRIMES = [2, 3, 5, 7, 101, 2**31 - 1]


def _scalars(F):
    if F.is_prime_field:
        return st.integers(0, F.modulus - 1).map(lambda v: Scalar(F, v))
    return rationals.map(lambda v: Scalar(F, v))


def _axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x - x == Scalar(x.field, 0)


@settings(max_examples=1000, deadline=None)
@given(st.data())
def test_ring_axioms_rationals(data):
    x, y, z = (data.draw(_scalars(QQ)) for _ in range(3))
    _axioms(x, y, z)


@pytest.mark.parametrize("p", PRIMES)
@settings(max_examples=1000, deadline=None)
@given(data=st.data())
def test_ring_axioms_prime_fields(p, data):
    F = FieldTag.gf(p)
    x, y, z = (data.draw(_scalars(F)) for _ in range(3))
    _axioms(x, y, z)


@pytest.mark.parametrize("F", [QQ] + [FieldTag.gf(p) for p in PRIMES])
@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_inverse_involution(F, data):
    x = data.draw(_scalars(F).filter(bool))
    assert field_inverse(field_inverse(x)) == x
    assert x * field_inverse(x) == Scalar(F, 1)


@settings(max_examples=500, deadline=None)
@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6).filter(bool), st.integers(-50, 50).filter(bool))
def test_canonical_form_unique(a, b, k):
    x, y = normalize_rational(a, b), normalize_rational(k * a, k * b)
    assert x == y
    assert y.value.denominator > 0
