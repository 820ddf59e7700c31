from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from binomverify.exact import PreconditionError, binom_rational
from binomverify.polynomial import (
    RationalPolynomial as P,
    binom_affine_poly,
    poly_add,
    poly_degree,
    poly_eval,
    poly_mul,
    render_polynomial,
)

from helpers import small_fractions

polys = st.lists(small_fractions, max_size=6).map(P)


def is_canonical(p):
    return not p.coefficients or p.coefficients[-1] != 0


@pytest.mark.parametrize(
    "a, b, expected",
    [([1, 2], [0], [1, 2]), ([1, 2], [-1, -2], []), ([2, -1], [0, 1], [2])],
)
def test_poly_add_examples(a, b, expected):
    assert poly_add(P(a), P(b)) == P(expected)
    assert poly_add(P(a), P(b)).coefficients == tuple(Fraction(c) for c in expected)


@pytest.mark.parametrize(
    "a, b, expected",
    [([1], [0, 1], [0, 1]), ([0, 1], [0, 1], [0, 0, 1]), ([1, 1], [1, -1], [1, 0, -1])],
)
def test_poly_mul_examples(a, b, expected):
    assert poly_mul(P(a), P(b)).coefficients == tuple(Fraction(c) for c in expected)


@pytest.mark.parametrize(
    "coeffs, point, expected",
    [([], 7, 0), ([1, 0, -1], 2, -3), ([0, Fraction(1, 2), Fraction(1, 2)], 3, 6)],
)
def test_poly_eval_examples(coeffs, point, expected):
    assert poly_eval(P(coeffs), point) == expected


def test_eval_example_matches_negated_binomial():
    assert poly_eval(P([0, Fraction(1, 2), Fraction(1, 2)]), 3) == binom_rational(-3, 2)


@pytest.mark.parametrize(
    "a, b, k, expected",
    [(0, 5, 2, [10]), (-1, 2, 1, [2, -1]), (-1, 0, 2, [0, Fraction(1, 2), Fraction(1, 2)])],
)
def test_binom_affine_poly_examples(a, b, k, expected):
    assert binom_affine_poly(a, b, k) == P(expected)


def test_binom_affine_poly_rejects_negative_k():
    with pytest.raises(PreconditionError):
        binom_affine_poly(1, 0, -1)


@pytest.mark.parametrize(
    "coeffs, degree", [([], -1), ([7], 0), ([0, Fraction(1, 2), Fraction(1, 2)], 2), ([1, 0, 0], 0)]
)
def test_poly_degree(coeffs, degree):
    assert poly_degree(P(coeffs)) == degree


def test_render():
    assert render_polynomial(P([0, Fraction(1, 2), Fraction(1, 2)])) == "[0, 1/2, 1/2]"
    assert render_polynomial(P()) == "[]"
    assert str(P([Fraction(-3, 4), 2])) == "[-3/4, 2]"


@given(polys, polys, small_fractions)
def test_evaluation_is_a_homomorphism(a, b, t):
    assert poly_eval(poly_mul(a, b), t) == poly_eval(a, t) * poly_eval(b, t)
    assert poly_eval(poly_add(a, b), t) == poly_eval(a, t) + poly_eval(b, t)


@given(polys, polys)
def test_outputs_are_canonical(a, b):
    for result in (poly_add(a, b), poly_mul(a, b), a - b, -a):
        assert is_canonical(result)
        assert result.degree == len(result.coefficients) - 1


@given(small_fractions, small_fractions, st.integers(0, 8), small_fractions)
def test_binom_affine_poly_matches_scalar(a, b, k, t):
    p = binom_affine_poly(a, b, k)
    assert poly_eval(p, t) == binom_rational(a * t + b, k)
    assert p.degree == (k if a != 0 else (0 if binom_rational(b, k) != 0 else -1))


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c))
    assert poly_mul(a, b) == poly_mul(b, a)
    assert poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c))


def test_degree_bound_root_count():
    # a nonzero polynomial of degree d vanishing at d+1 points cannot exist;
    # conversely (l)(l-1)(l-2) vanishes at exactly three of 0..3
    p = P([0, 1]) * P([-1, 1]) * P([-2, 1])
    assert [poly_eval(p, t) == 0 for t in range(4)] == [True, True, True, False]
