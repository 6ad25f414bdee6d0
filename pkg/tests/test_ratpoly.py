"""Polynomial kernel: arithmetic examples, canonical form, ring axioms."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lucaskit.ratpoly import ONE, RatPoly, X, Y, ZERO, binomial

HALF = Fraction(1, 2)


def test_add_cancellation():
    assert (X + Y) + (X - Y) == X.scale(2)


def test_add_zero_is_identity():
    p = RatPoly.monomial(2, 1, 3)  # 3*x^2*y
    assert p + ZERO == p


def test_add_merges_terms():
    assert (X ** 2 + Y.scale(2)) + (X ** 2 + Y.scale(4)) == RatPoly({(2, 0): 2, (0, 1): 6})


def test_mul_monomials():
    assert X * Y == RatPoly.monomial(1, 1)


def test_mul_difference_of_squares():
    assert (X + Y) * (X - Y) == X ** 2 - Y ** 2


def test_mul_by_zero_annihilates():
    assert ZERO * (X + Y.scale(5)) == ZERO


def test_scale_half():
    assert (X ** 2 + Y.scale(2)).scale(HALF) == RatPoly({(2, 0): HALF, (0, 1): 1})


def test_scale_one_and_zero():
    p = X ** 2 + Y
    assert p.scale(1) == p
    assert p.scale(0) == ZERO


def test_pow_zero_is_one():
    assert (X ** 2 + Y.scale(4)) ** 0 == ONE


def test_pow_square():
    assert (X + Y) ** 2 == X ** 2 + RatPoly.monomial(1, 1, 2) + Y ** 2


def test_pow_monomial():
    assert X ** 3 == RatPoly.monomial(3, 0)


def test_pow_rejects_negative():
    with pytest.raises(ValueError):
        (X + Y) ** -1


def test_subst_identity():
    p = X ** 2 + Y
    assert p.subst(X, Y) == p


def test_subst_into_variable():
    assert X.subst(X ** 2 + Y.scale(2), Y.scale(7)) == X ** 2 + Y.scale(2)


def test_subst_example_6b_style():
    # (x^2 + y) with x := 3x, y := y - 2x^2
    p = X ** 2 + Y
    assert p.subst(X.scale(3), Y - (X ** 2).scale(2)) == RatPoly({(2, 0): 7, (0, 1): 1})


def test_subst_constant_argument():
    assert (X ** 2).subst(RatPoly.constant(2), Y) == RatPoly.constant(4)


def test_eval_lucas_point():
    assert (X ** 2 + Y.scale(2)).eval_at(1, 1) == 3  # the Lucas number L_2


def test_eval_zero():
    assert ZERO.eval_at(5, Fraction(7, 3)) == 0


def test_eval_linear():
    assert X.eval_at(2, 1) == 2


def test_eval_rational_point():
    assert (X * Y).eval_at(HALF, Fraction(2, 3)) == Fraction(1, 3)


def test_equal_commuted_construction():
    assert X + Y == Y + X


def test_unequal_variables():
    assert X != Y


def test_equal_after_expansion():
    assert (X + Y) ** 2 == X ** 2 + RatPoly.monomial(1, 1, 2) + Y ** 2


def test_equality_with_scalars():
    assert RatPoly.constant(3) == 3
    assert ZERO == 0
    assert ONE == Fraction(2, 2)


def test_render_canonical_order():
    assert str(X ** 2 + Y.scale(2)) == "x^2 + 2*y"
    assert str(ZERO) == "0"
    assert str((X ** 2).scale(HALF) + Y) == "1/2*x^2 + y"
    assert str(X ** 2 - Y.scale(4)) == "x^2 - 4*y"
    assert str(-X) == "-x"
    assert str(RatPoly({(3, 0): 1, (1, 1): 2})) == "x^3 + 2*x*y"


def test_render_orders_terms_lexicographically():
    p = RatPoly({(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): 1, (2, 0): 1, (0, 2): 1})
    assert str(p) == "x^2 + x*y + x + y^2 + y + 1"


def test_constructor_rejects_bad_monomials():
    with pytest.raises(ValueError):
        RatPoly({(-1, 0): 1})
    with pytest.raises(ValueError):
        RatPoly({(0,): 1})
    with pytest.raises(TypeError):
        RatPoly({(0, 0): 1.5})


def test_constructor_drops_zero_coefficients():
    assert RatPoly({(1, 0): 0, (0, 1): 2}).terms == {(0, 1): 2}


def test_integral_fractions_normalize_to_ints():
    p = RatPoly({(1, 0): Fraction(6, 3)})
    assert p.terms == {(1, 0): 2}
    assert isinstance(p.terms[(1, 0)], int)


def test_binomial_values():
    assert [binomial(5, b) for b in range(6)] == [1, 5, 10, 10, 5, 1]
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0
    assert binomial(0, 0) == 1


# -- property suites ----------------------------------------------------------

monomials = st.tuples(st.integers(0, 4), st.integers(0, 4))
coefficients = st.integers(-9, 9)
polys = st.builds(
    RatPoly, st.dictionaries(monomials, coefficients, max_size=6)
)
small_rationals = st.fractions(min_value=-9, max_value=9, max_denominator=9)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys)
def test_canonical_form_idempotent(p):
    assert RatPoly(p.terms) == p
    assert all(c != 0 for c in p.terms.values())


@given(polys)
def test_subst_identity_property(p):
    assert p.subst(X, Y) == p


@given(polys, polys, small_rationals, small_rationals)
def test_eval_is_ring_homomorphism(p, q, x0, y0):
    assert (p * q).eval_at(x0, y0) == p.eval_at(x0, y0) * q.eval_at(x0, y0)
    assert (p + q).eval_at(x0, y0) == p.eval_at(x0, y0) + q.eval_at(x0, y0)


@settings(max_examples=40, deadline=None)
@given(
    st.builds(RatPoly, st.dictionaries(monomials, coefficients, max_size=3)),
    st.integers(0, 8),
    st.integers(0, 8),
)
def test_pow_is_additive(p, a, b):
    assert p ** (a + b) == (p ** a) * (p ** b)


@given(polys, polys, polys)
def test_subst_commutes_with_product(p, q, px):
    assert (p * q).subst(px, Y) == p.subst(px, Y) * q.subst(px, Y)
