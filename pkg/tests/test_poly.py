from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ginkit.poly import (
    Polynomial,
    Ring,
    TermOrder,
    apply_linear_substitution,
    monomial_compare,
    poly_arith,
)

from _util import poly

ORDERS = list(TermOrder)
R3 = Ring.standard(3)

exponents = st.tuples(*[st.integers(0, 4)] * 3)


@st.composite
def polys(draw, ring=R3, max_terms=4):
    terms = draw(st.dictionaries(exponents, st.integers(-5, 5), max_size=max_terms))
    return Polynomial(ring, terms)


@st.composite
def matrices(draw, n=3):
    return [[draw(st.integers(-3, 3)) for _ in range(n)] for _ in range(n)]


def test_compare_examples():
    assert monomial_compare((0, 2, 0), (1, 0, 1), TermOrder.DEGREVLEX) == 1
    assert monomial_compare((1, 0, 1), (0, 2, 0), TermOrder.LEX) == 1
    for order in ORDERS:
        assert monomial_compare((1, 1, 0), (1, 1, 0), order) == 0


def test_compare_length_mismatch():
    with pytest.raises(ValueError):
        monomial_compare((1, 0), (1, 0, 0), TermOrder.LEX)


def test_deglex_and_degrevlex_differ():
    # degree 3 in three variables: x1*x3^2 against x2^3
    a, b = (1, 0, 2), (0, 3, 0)
    assert monomial_compare(a, b, TermOrder.DEGLEX) == 1
    assert monomial_compare(a, b, TermOrder.DEGREVLEX) == -1


@given(exponents, exponents, exponents, st.sampled_from(ORDERS))
def test_compare_is_a_monomial_order(a, b, c, order):
    ab = monomial_compare(a, b, order)
    assert monomial_compare(b, a, order) == -ab
    if ab == 1:
        ac = tuple(x + y for x, y in zip(a, c))
        bc = tuple(x + y for x, y in zip(b, c))
        assert monomial_compare(ac, bc, order) == 1
        if monomial_compare(b, c, order) == 1:
            assert monomial_compare(a, c, order) == 1
    # the unit monomial is the minimum
    assert monomial_compare(a, (0, 0, 0), order) >= 0


def test_arith_examples():
    f = poly("x1*x3 - x2^2")
    assert f + poly("x2^2") == poly("x1*x3")
    assert poly("x1 + x2") * poly("x1 - x2") == poly("x1^2 - x2^2")
    assert poly_arith(poly("x1"), poly("x2"), "mul") == poly("x1*x2")
    assert f.leading_term(TermOrder.DEGREVLEX) == (-1, (0, 2, 0))
    assert f.leading_term(TermOrder.LEX) == (1, (1, 0, 1))


def test_leading_term_of_zero_raises():
    with pytest.raises(ValueError):
        R3.zero().leading_term(TermOrder.LEX)


def test_rational_and_modular_coefficients():
    half = poly("1/2*x1^2", n=1)
    assert half.coefficient((2,)) == Fraction(1, 2)
    assert (half * 2).coefficient((2,)) == 1
    assert isinstance((half * 2).coefficient((2,)), int)
    f = poly("3*x1 + 4*x2", n=2, char=5)
    assert f * 2 == poly("x1 + 3*x2", n=2, char=5)
    assert Polynomial(Ring.standard(1, 5), {(1,): 5}).is_zero()


def test_mixed_rings_rejected():
    with pytest.raises(ValueError):
        poly("x1", n=2) + poly("x1", n=3)


def test_to_string():
    assert poly("x1*x3 - x2^2").to_string(TermOrder.DEGREVLEX) == "-x2^2 + x1*x3"
    assert poly("1/2*x1^2", n=1).to_string() == "1/2*x1^2"


def test_substitution_examples():
    p = poly("x1^2")
    identity = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert apply_linear_substitution(p, identity) == p
    shift = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    assert apply_linear_substitution(p, shift) == poly("x1^2 + 2*x1*x2 + x2^2")
    swap = [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
    f = poly("x1*x3 - x2^2")
    assert apply_linear_substitution(f, swap) == f


def test_substitution_size_mismatch():
    with pytest.raises(ValueError):
        apply_linear_substitution(poly("x1"), [[1, 0], [0, 1]])


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == R3.zero()


@settings(max_examples=40, deadline=None)
@given(polys(max_terms=3), polys(max_terms=3), matrices())
def test_substitution_is_ring_homomorphism(p, q, g):
    phi = lambda f: apply_linear_substitution(f, g)  # noqa: E731
    assert phi(p + q) == phi(p) + phi(q)
    assert phi(p * q) == phi(p) * phi(q)


@settings(max_examples=40, deadline=None)
@given(polys())
def test_homogeneous_substitution_keeps_degree(p):
    g = [[2, -1, 0], [1, 1, 3], [0, 1, 1]]
    q = apply_linear_substitution(p, g)
    if p.homogeneous and not q.is_zero():
        assert q.homogeneous and q.degree == p.degree
