from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from rhoghn.errors import IndexOutOfRange, NonPositiveLeading, ParseError, ZeroPolynomial
from rhoghn.polyq import (
    ZERO_DEGREE,
    Ordering,
    RationalPoly,
    parse_rational,
    poly_cmp,
    reduced_hp,
    slope,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(rationals, max_size=5).map(RationalPoly)

P_O = RationalPoly.binomial(3, 3)


def test_binomial_is_structure_sheaf_of_p3():
    assert P_O == RationalPoly([1, F(11, 6), 1, F(1, 6)])
    assert [P_O(n) for n in range(4)] == [1, 4, 10, 20]


def test_zero_polynomial_degree_and_order():
    z = RationalPoly()
    assert z.degree == ZERO_DEGREE
    assert poly_cmp(z, RationalPoly([0, 1])) is Ordering.LT
    assert poly_cmp(z, RationalPoly([5])) is Ordering.LT
    assert poly_cmp(z, RationalPoly([0, -1])) is Ordering.GT


def test_cmp_examples():
    # A lower constant term loses when everything above agrees.
    assert poly_cmp(P_O, P_O - 1) is Ordering.GT
    assert poly_cmp(RationalPoly([100, 1]), RationalPoly([0, 0, 1])) is Ordering.LT
    assert poly_cmp(P_O, P_O) is Ordering.EQ


def test_reduced_and_slope():
    p = RationalPoly([0, 3, 2])  # 2 n^2 + 3 n, a_2 = 4
    assert reduced_hp(p) == RationalPoly([0, F(3, 4), F(1, 2)])
    assert slope(P_O, 2) == 2
    assert slope(P_O, 3) == 1
    assert slope(P_O, 0) == 1


def test_errors():
    with pytest.raises(ZeroPolynomial):
        reduced_hp(RationalPoly())
    with pytest.raises(NonPositiveLeading):
        reduced_hp(RationalPoly([1, -1]))
    with pytest.raises(IndexOutOfRange):
        slope(P_O, 4)
    with pytest.raises(ParseError):
        parse_rational(0.5)
    with pytest.raises(ParseError):
        RationalPoly.from_json(["1/0"])


def test_json_round_trip():
    p = RationalPoly([F(-1, 2), 0, F(7, 3)])
    assert p.to_json() == ["-1/2", "0", "7/3"]
    assert RationalPoly.from_json(p.to_json()) == p
    assert RationalPoly.from_json([1, "2", "-3/4"]) == RationalPoly([1, 2, F(-3, 4)])


def test_str():
    assert str(RationalPoly([1, -2, 1])) == "n^2 - 2*n + 1"
    assert str(RationalPoly()) == "0"


@given(polys, polys)
def test_cmp_antisymmetric_and_matches_large_n(p, q):
    o = poly_cmp(p, q)
    assert poly_cmp(q, p) == Ordering(-o)
    # Coefficients are bounded by 20 with denominators up to 12, so the sign
    # of the difference has settled well before n = 10**6.
    diff = (p - q)(10**6)
    assert (diff > 0) - (diff < 0) == int(o)


@given(polys, polys, polys)
def test_cmp_transitive_and_translation_invariant(p, q, r):
    if p <= q and q <= r:
        assert p <= r
    assert poly_cmp(p + r, q + r) == poly_cmp(p, q)


@given(polys, polys, rationals)
def test_ring_laws(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p - p).is_zero()


@given(st.lists(rationals, min_size=1, max_size=5), st.fractions(min_value=F(1, 10), max_value=10))
def test_reduced_is_scale_invariant(cs, k):
    cs = cs[:-1] + [abs(cs[-1]) + 1]
    p = RationalPoly(cs)
    assert reduced_hp(p * k) == reduced_hp(p)
