from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agpoly.qpoly import (
    GradedSeries,
    QPoly,
    TruncatedSeries,
    pochhammer,
    poly_mul,
    q_pochhammer_inverse_series,
    reciprocal_transform,
    restricted_product_series,
    triple_product_form,
)
from oracles import partitions_with_parts, poly_dict_mul

P = QPoly.parse

laurent = st.builds(
    lambda coeffs, lo: QPoly(coeffs, lo),
    st.lists(st.integers(-10**30, 10**30), max_size=60),
    st.integers(-8, 8),
)


def test_mul_examples():
    assert poly_mul(P("1 + q"), P("1 + q")) == P("1 + 2*q + q^2")
    assert poly_mul(QPoly.zero(), P("3 + q^7")).is_zero()
    assert QPoly.monomial(-1) * P("1 + q") * QPoly.monomial(1) == P("1 + q")


def test_pochhammer_small():
    assert pochhammer(0) == QPoly.one()
    assert pochhammer(1) == P("1 - q")
    assert pochhammer(2) == P("1 - q - q^2 + q^3")


@given(laurent, laurent)
@settings(max_examples=80, deadline=None)
def test_mul_matches_naive_convolution(a, b):
    want = poly_dict_mul(dict(a.terms()), dict(b.terms()))
    assert dict((a * b).terms()) == want


def test_kronecker_path_with_mixed_signs():
    # long enough to go through big-integer packing
    a = QPoly([(-1) ** j * (j * 7919 + 3) ** 5 for j in range(300)], -40)
    b = QPoly([(j % 13 - 6) * 10**25 for j in range(257)], 5)
    assert dict((a * b).terms()) == poly_dict_mul(dict(a.terms()), dict(b.terms()))


def test_kronecker_with_all_zero_operand():
    big = list(range(1000, 1040))
    zeros = [0] * 30
    assert TruncatedSeries(big, 39) * TruncatedSeries(zeros + [0] * 10, 39) == TruncatedSeries([0], 39)
    assert dict((QPoly(big) * QPoly([0] * 29 + [1])).terms()) == {29 + j: c for j, c in enumerate(big)}


@given(laurent, laurent, laurent)
@settings(max_examples=40, deadline=None)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    assert a * b == b * a


@given(laurent)
@settings(max_examples=60, deadline=None)
def test_text_and_json_round_trip(p):
    assert QPoly.parse(p.to_str()) == p
    assert QPoly.from_json(p.to_json()) == p


def test_rendering():
    assert P("1 + q + q^2").to_str() == "1 + q + q^2"
    assert QPoly.monomial(-2, -3).to_str() == "-3*q^(-2)"
    assert QPoly.zero().to_str() == "0"


def test_reciprocal_transform():
    assert reciprocal_transform(P("1 + q"), 1) == P("1 + q")
    assert reciprocal_transform(P("1 + 2*q + q^3"), 3) == P("1 + 2*q^2 + q^3")
    p = P("4 - q^2 + 9*q^5")
    assert reciprocal_transform(reciprocal_transform(p, 6), 6) == p


def test_restricted_products_against_partition_counts():
    s = restricted_product_series(5, {0, 2, 3}, 5)
    assert s.to_poly() == P("1 + q + q^2 + q^3 + 2*q^4 + 2*q^5")
    odd = restricted_product_series(2, {0}, 4)
    assert odd.to_poly() == P("1 + q + q^2 + 2*q^3 + 2*q^4")
    assert restricted_product_series(4, {0, 1, 2, 3}, 9).to_poly() == QPoly.one()
    for mod, excl in [(7, {0, 3, 4}), (9, {0, 1, 8}), (6, {0})]:
        want = partitions_with_parts(30, [j for j in range(1, 31) if j % mod not in excl])
        assert list(restricted_product_series(mod, excl, 30).coeffs) == want


def test_triple_product_agrees_with_product():
    assert triple_product_form(1, 2, 10) == restricted_product_series(5, {0, 2, 3}, 10)
    assert triple_product_form(2, 3, 8) == restricted_product_series(7, {0, 3, 4}, 8)
    assert triple_product_form(3, 1, 0).to_poly() == QPoly.one()


def test_series_inverse_and_pochhammer():
    order = 25
    inv = q_pochhammer_inverse_series(None, order)
    assert list(inv.coeffs) == partitions_with_parts(order, range(1, order + 1))
    poch = TruncatedSeries.from_poly(pochhammer(order), order)
    assert poch.inverse() == inv
    assert (poch * inv) == TruncatedSeries.one(order)


def test_from_poly_rejects_negative_powers():
    with pytest.raises(ValueError):
        TruncatedSeries.from_poly(QPoly.monomial(-1), 3)


def test_graded_series_rescale_and_compare():
    a = GradedSeries(4, {2: 1, 6: -3}, 20)
    b = a.rescale(2)
    assert b.denominator == 8 and b.terms() == {4: 1, 12: -3}
    assert a == b
    assert a.valuation() == Fraction(1, 2)
    c = GradedSeries(4, {2: 1, 6: -2}, 20)
    assert a.first_difference(c) == Fraction(3, 2)
    assert a.first_difference(a) is None
