import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from apolar import (
    GF,
    QQ,
    LinearChange,
    Poly,
    apply_change,
    diff_action,
    monomials_of_degree,
    parse_poly,
    random_linear_change,
    random_linear_form,
)

FP = GF()


def P(text, n, field=QQ):
    return parse_poly(text, n, field)


class TestMonomialEnumeration:
    def test_two_vars_degree_two(self):
        assert monomials_of_degree(2, 2) == [(2, 0), (1, 1), (0, 2)]

    def test_four_vars_degree_one(self):
        assert monomials_of_degree(4, 1) == [
            (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]

    def test_degree_zero(self):
        assert monomials_of_degree(3, 0) == [(0, 0, 0)]

    def test_counts_and_order(self):
        for n in range(1, 5):
            for d in range(0, 6):
                mons = monomials_of_degree(n, d)
                assert len(mons) == comb(n + d - 1, d)
                assert mons == sorted(mons, reverse=True)


class TestArithmetic:
    def test_add_cancellation(self):
        assert P("X1 + X2", 2) + P("-X1", 2) == P("X2", 2)

    def test_add_identity(self):
        p = P("3*X1^2 - X2", 2)
        assert p + Poly.zero(2, QQ) == p

    def test_add_doubling(self):
        assert P("X1^2", 2) + P("X1^2", 2) == P("2*X1^2", 2)

    def test_mul_monomials(self):
        assert P("X1", 2) * P("X2", 2) == P("X1*X2", 2)

    def test_mul_difference_of_squares(self):
        assert P("X1+X2", 2) * P("X1-X2", 2) == P("X1^2 - X2^2", 2)

    def test_mul_identity(self):
        p = P("X1^2*X2 - 5*X2^3", 2)
        assert p * Poly.one(2, QQ) == p

    def test_cross_field_rejected(self):
        with pytest.raises(ValueError):
            P("X1", 2) + P("X1", 2, FP)
        with pytest.raises(ValueError):
            P("X1", 2) * P("X1", 3)

    def test_degree_of_zero_undefined(self):
        with pytest.raises(ValueError):
            Poly.zero(2, QQ).degree()


class TestDiffAction:
    def test_single_differentiation(self):
        assert diff_action(P("X1", 3), P("X1*X2*X3", 3)) == P("X2*X3", 3)

    def test_linearity_and_power_rule(self):
        assert diff_action(P("X1+X2", 2), P("X1^2", 2)) == P("2*X1", 2)

    def test_order_exceeds_degree(self):
        assert diff_action(P("X2^2", 2), P("X1^2*X2", 2)).is_zero()

    def test_prime_field_requires_large_modulus(self):
        f = GF(5)
        with pytest.raises(ValueError):
            diff_action(P("X1", 1, f), P("X1^7", 1, f))


@st.composite
def random_poly(draw, n=3, max_degree=3, field=QQ):
    mons = [m for d in range(max_degree + 1) for m in monomials_of_degree(n, d)]
    chosen = draw(st.lists(st.sampled_from(mons), max_size=5))
    coeffs = draw(st.lists(
        st.integers(min_value=-20, max_value=20), min_size=len(chosen), max_size=len(chosen)))
    terms = {}
    for m, c in zip(chosen, coeffs):
        terms[m] = QQ.add(terms.get(m, QQ.zero), QQ.from_int(c))
    return Poly(n, field, {m: c for m, c in terms.items() if c})


@settings(max_examples=60)
@given(random_poly(), random_poly(), random_poly())
def test_diff_action_bilinear(p, q, F):
    assert diff_action(p + q, F) == diff_action(p, F) + diff_action(q, F)
    assert diff_action(p, F + q) == diff_action(p, F) + diff_action(p, q)


@settings(max_examples=60)
@given(random_poly(max_degree=2), random_poly(max_degree=2), random_poly())
def test_diff_action_multiplicative(p, q, F):
    assert diff_action(p * q, F) == diff_action(p, diff_action(q, F))


class TestLinearChange:
    def test_identity(self):
        p = P("X1^2*X3 - X2", 3)
        assert LinearChange.identity(3, QQ).apply(p) == p

    def test_swap(self):
        g = LinearChange([[0, 1], [1, 0]], QQ)
        assert apply_change(g, P("X1^2", 2)) == P("X2^2", 2)

    def test_inverse_composition(self):
        rng = random.Random(7)
        g = random_linear_change(3, FP, rng)
        p = P("X1^2*X2 + 4*X3^3", 3, FP)
        assert g.inverse().apply(g.apply(p)) == p

    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            LinearChange([[1, 1], [1, 1]], QQ)

    def test_ring_homomorphism(self):
        rng = random.Random(41)
        for _ in range(10):
            g = random_linear_change(3, FP, rng)
            p = Poly(3, FP, {m: FP.rand(rng) for m in monomials_of_degree(3, 2)})
            q = Poly(3, FP, {m: FP.rand(rng) for m in monomials_of_degree(3, 1)})
            assert g.apply(p * q) == g.apply(p) * g.apply(q)


class TestRandomLinearForm:
    def test_deterministic_given_seed(self):
        a = random_linear_form(4, FP, random.Random(123))
        b = random_linear_form(4, FP, random.Random(123))
        assert a == b

    def test_distinct_seeds_distinct_forms(self):
        a = random_linear_form(4, FP, random.Random(1))
        b = random_linear_form(4, FP, random.Random(2))
        assert a != b

    def test_single_variable_nonzero(self):
        for seed in range(5):
            form = random_linear_form(1, FP, random.Random(seed))
            assert not form.is_zero()

    def test_rational_field_rejected(self):
        with pytest.raises(ValueError):
            random_linear_form(3, QQ, random.Random(0))
