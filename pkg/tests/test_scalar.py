from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qcms.scalar import I, ONE, ZERO, Scalar, as_scalar

fracs = st.fractions(max_denominator=50).filter(lambda f: abs(f.numerator) < 10**6)
scalars = st.builds(Scalar, fracs, fracs)


def test_lowest_terms():
    s = Scalar(Fraction(6, -4), Fraction(10, 20))
    assert s.re == Fraction(-3, 2) and s.im == Fraction(1, 2)
    assert s.re.denominator > 0


def test_i_squared():
    assert I * I == Scalar(-1)
    assert I ** 4 == ONE
    assert I ** -1 == -I


def test_text_forms():
    assert str(Scalar(3)) == "3"
    assert str(Scalar(Fraction(-2, 3))) == "-2/3"
    assert str(Scalar(0, Fraction(1, 2))) == "1/2·i"
    assert str(Scalar(1, -1)) == "1 - i"
    assert str(Scalar(Fraction(1, 2), 3)) == "1/2 + 3·i"
    assert str(ZERO) == "0"


def test_int_comparison():
    assert Scalar(8) == 8
    assert as_scalar(Fraction(1, 3)) == Scalar(Fraction(1, 3))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


@given(scalars)
def test_parse_round_trip(s):
    assert Scalar.parse(str(s)) == s
    assert Scalar.from_json(s.to_json()) == s


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a


@given(scalars)
def test_conjugate_norm_is_real(a):
    n = a * a.conjugate()
    assert n.im == 0 and n.re >= 0
