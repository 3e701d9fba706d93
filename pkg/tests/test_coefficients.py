from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from freesplit import FieldMismatch
from freesplit.coefficients import GF, QQ, FieldElement, PrimeField, field_arith, field_inverse


def test_rational_addition():
    assert field_arith(QQ(Fraction(1, 2)), QQ(Fraction(1, 3)), "add") == QQ(Fraction(5, 6))


def test_prime_field_product():
    F7 = GF(7)
    assert field_arith(F7(3), F7(5), "mul") == F7(1)


def test_division_by_zero():
    F7 = GF(7)
    with pytest.raises(ZeroDivisionError):
        field_arith(F7(1), F7(0), "div")


def test_inverses():
    assert field_inverse(GF(11)(4)) == GF(11)(3)
    assert field_inverse(QQ(Fraction(-2, 3))) == QQ(Fraction(-3, 2))
    with pytest.raises(ZeroDivisionError):
        field_inverse(QQ(0))


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatch):
        field_arith(GF(7)(1), GF(11)(1), "add")
    with pytest.raises(FieldMismatch):
        field_arith(QQ(1), GF(7)(1), "add")


def test_composite_modulus_rejected():
    with pytest.raises(ValueError):
        PrimeField(15)


def test_canonical_forms():
    a = QQ(Fraction(6, -4))
    assert a.value.denominator > 0 and a.value == Fraction(-3, 2)
    assert GF(7)(-1).value == 6
    assert hash(QQ(Fraction(2, 4))) == hash(QQ(Fraction(1, 2)))
    assert QQ.parse("3/6") == Fraction(1, 2)
    assert GF(7).parse("1/3") == 5


def test_immutable():
    a = QQ(1)
    with pytest.raises(AttributeError):
        a.value = 2


rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 10**6)
residues = st.integers(min_value=0, max_value=7 * 97 - 1)


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    a, b, c = QQ(a), QQ(b), QQ(c)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    if not a.is_zero():
        assert a * a.inverse() == QQ(1)


@given(residues, residues, residues, st.sampled_from([2, 7, 97, 2**31 - 1]))
def test_prime_field_axioms(a, b, c, p):
    F = GF(p)
    a, b, c = F(a), F(b), F(c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F(0)
    if not a.is_zero():
        assert a / a == F(1)
    assert 0 <= (a * b).value < p


def test_field_element_constructor():
    assert isinstance(GF(5)(7), FieldElement)
    assert GF(5)(7) == 2
