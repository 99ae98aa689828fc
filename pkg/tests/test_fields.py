from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from apolar import DEFAULT_PRIME, GF, QQ, PrimeField, field_from_description


def test_default_prime_is_prime():
    assert DEFAULT_PRIME == 2**61 - 1
    GF(DEFAULT_PRIME)  # constructor runs the primality check


def test_composite_modulus_rejected():
    with pytest.raises(ValueError):
        PrimeField(2**61 - 3)


def test_prime_field_basics():
    f = GF(101)
    assert f.add(100, 5) == 4
    assert f.sub(3, 10) == 94
    assert f.mul(f.inv(7), 7) == 1
    assert f.from_fraction(1, 2) == 51
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_field_equality_and_description():
    assert GF(101) == GF(101)
    assert GF(101) != GF(103)
    assert QQ == QQ
    assert QQ.describe() == "q"
    assert GF(101).describe() == "fp:101"
    assert field_from_description("fp:101") == GF(101)
    assert field_from_description("q") == QQ
    assert field_from_description("fp") == GF(DEFAULT_PRIME)
    with pytest.raises(ValueError):
        field_from_description("gf2")


nonzero_rationals = st.fractions(
    min_value=Fraction(-10**6), max_value=Fraction(10**6), max_denominator=10**4
).filter(lambda x: x != 0)


@given(nonzero_rationals)
def test_rational_inverse_exact(a):
    assert QQ.mul(a, QQ.inv(a)) == 1


@given(st.integers(min_value=1, max_value=DEFAULT_PRIME - 1))
def test_prime_inverse_exact(a):
    f = GF(DEFAULT_PRIME)
    assert f.mul(a, f.inv(a)) == 1
