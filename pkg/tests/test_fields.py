from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from leibnil.fields import GF, QQ, PrimeField, field_from_descriptor

from .strategies import scalars, small_fields


@pytest.mark.parametrize("p", [2, 1, 0, 4, 9, 15, -3])
def test_bad_field_orders_rejected(p):
    with pytest.raises(ValueError):
        PrimeField(p)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 101])
def test_odd_primes_accepted(p):
    assert GF(p).p == p


def test_rational_parse_and_format():
    assert QQ.parse("2/3") == Fraction(2, 3)
    assert QQ.parse("-7") == Fraction(-7)
    assert QQ.parse(5) == Fraction(5)
    assert QQ.format(Fraction(-2, 3)) == "-2/3"
    with pytest.raises(ValueError):
        QQ.parse(1.5)
    with pytest.raises(ValueError):
        QQ.parse(True)


def test_prime_field_parse():
    f = GF(5)
    assert f.parse("7") == 2
    assert f.parse(-1) == 4
    assert f.parse("3/2") == f.div(3, 2)
    with pytest.raises(ValueError):
        f.parse(2.0)


def test_division_by_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        QQ.div(QQ.one, QQ.zero)
    with pytest.raises(ZeroDivisionError):
        GF(7).div(3, 0)


@given(st.fractions(max_denominator=50).filter(lambda x: x != 0))
def test_rational_mul_div_inverse(a):
    # (a/b) * (b/a) = 1 exactly
    assert QQ.mul(QQ.div(QQ.one, a), a) == QQ.one


@given(st.sampled_from([GF(3), GF(5), GF(7)]), st.data())
def test_fermat_little(field, data):
    x = data.draw(st.integers(min_value=1, max_value=field.p - 1))
    acc = field.one
    for _ in range(field.p - 1):
        acc = field.mul(acc, x)
    assert acc == field.one


@given(small_fields, st.data())
def test_field_axioms_sampled(field, data):
    a = data.draw(scalars(field))
    b = data.draw(scalars(field))
    c = data.draw(scalars(field))
    assert field.add(a, b) == field.add(b, a)
    assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
    assert field.sub(a, a) == field.zero
    if b != field.zero:
        assert field.mul(field.div(a, b), b) == a


def test_field_descriptors_round_trip():
    assert field_from_descriptor({"type": "Q"}) == QQ
    assert field_from_descriptor({"type": "Fp", "p": 5}) == GF(5)
    with pytest.raises(ValueError):
        field_from_descriptor({"type": "Fp", "p": 2})
    with pytest.raises(ValueError):
        field_from_descriptor({"type": "R"})
