from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agpoly.qcomb import (
    MultinomialKey,
    andrews_closed_form,
    andrews_generating_polynomial,
    check_fundamental_recurrence,
    check_superscript_reduction,
    check_symmetry,
    check_t2,
    check_tautology,
    check_unappealing_recurrence,
    classical_multinomial,
    classical_multinomial_sum,
    gaussian_binomial,
    q_multinomial,
    q_multinomial_tilde,
    q_multinomial_tilde_direct,
)
from agpoly.qpoly import QPoly
from oracles import box_partitions, multinomial_coefficient, poly_dict_mul

P = QPoly.parse


def naive_binomial(L, a):
    if not 0 <= a <= L:
        return {}
    return box_partitions(L - a, a)


def naive_multinomial(L, a, p, k):
    """Straight sum over every chain L >= j_1 >= ... >= j_k with sum a."""
    total = {}
    for js in product(range(L + 1), repeat=k):
        if sum(js) != a or any(js[t] < js[t + 1] for t in range(k - 1)):
            continue
        chain = (L,) + js
        term = {0: 1}
        for t in range(k):
            term = poly_dict_mul(term, naive_binomial(chain[t], chain[t + 1]))
        expo = sum((L - js[t]) * js[t + 1] for t in range(k - 1)) - sum(js[k - p :])
        for e, c in term.items():
            total[e + expo] = total.get(e + expo, 0) + c
    return QPoly.from_dict(total)


def test_binomial_examples():
    assert gaussian_binomial(4, 2) == P("1 + q + 2*q^2 + q^3 + q^4")
    assert gaussian_binomial(3, 5).is_zero()
    for L in range(6):
        assert gaussian_binomial(L, 0) == QPoly.one()
    assert gaussian_binomial(-2, 0).is_zero()


@pytest.mark.parametrize("L", range(0, 8))
def test_binomial_counts_box_partitions(L):
    for a in range(L + 1):
        assert dict(gaussian_binomial(L, a).terms()) == naive_binomial(L, a)


def test_multinomial_examples():
    assert q_multinomial(2, 2, 0, 2) == P("1 + q + q^2")
    assert q_multinomial(2, 2, 0, 2).at_one() == 3
    for a in range(4):
        for p in range(3):
            assert q_multinomial(0, a, p, 2) == (QPoly.one() if a == 0 else QPoly.zero())
    # one superscript step on the binomial case divides by q^a
    for L in range(6):
        for a in range(L + 1):
            assert q_multinomial(L, a, 1, 1) == gaussian_binomial(L, a).shift(-a)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_multinomial_against_naive_chain_sum(k):
    for L in range(0, 5):
        for a in range(0, k * L + 1):
            for p in range(k + 1):
                assert q_multinomial(L, a, p, k) == naive_multinomial(L, a, p, k), (L, a, p, k)


def test_truncated_multinomial_is_a_prefix():
    full = q_multinomial(12, 9, 2, 3)
    assert q_multinomial(12, 9, 2, 3, max_exp=15) == full.truncate(15)


def test_key_validation():
    with pytest.raises(ValueError):
        MultinomialKey(3, 1, 4, 3)
    with pytest.raises(ValueError):
        q_multinomial(3, 1, 0, 0)


def test_tilde_examples_and_direct_sum():
    for p in range(3):
        assert q_multinomial_tilde(0, 0, p, 2) == QPoly.one()
    assert q_multinomial_tilde(1, 1, 0, 2) == QPoly.monomial(1)
    for k in (1, 2, 3):
        for L in range(5):
            for a in range(k * L + 1):
                for p in range(k + 1):
                    assert q_multinomial_tilde(L, a, p, k) == q_multinomial_tilde_direct(L, a, p, k)


def test_classical_multinomial():
    assert classical_multinomial(2, 2, 2) == 3
    for k in (1, 2, 4):
        assert classical_multinomial(5, 0, k) == 1
        assert all(classical_multinomial(1, a, k) == 1 for a in range(k + 1))
    for k in (1, 2, 3):
        for L in range(5):
            for a in range(k * L + 1):
                want = multinomial_coefficient(L, a, k)
                assert classical_multinomial(L, a, k) == want
                assert classical_multinomial_sum(L, a, k) == want
                assert q_multinomial(L, a, k, k).at_one() == want


def test_checker_examples():
    assert check_symmetry(4, 3, 1, 2)
    assert check_symmetry(0, 0, 1, 3)
    assert check_fundamental_recurrence(3, 2, 0, 2)
    assert check_fundamental_recurrence(1, 1, 1, 2)
    assert check_tautology(0, 0, 0, 2)
    assert check_tautology(3, 2, -1, 2)
    assert check_superscript_reduction(2, 2, 1, 1, 2)
    assert check_t2(0, 0, 0, 2)
    assert check_unappealing_recurrence(1, 1, 0, 1)


def test_superscript_reduction_at_r_zero_is_trivial():
    for a in range(7):
        assert check_superscript_reduction(3, a, 2, 0, 2)


def test_checker_preconditions():
    with pytest.raises(ValueError):
        check_fundamental_recurrence(0, 0, 0, 1)
    with pytest.raises(ValueError):
        check_tautology(2, 1, 2, 2)
    with pytest.raises(ValueError):
        check_superscript_reduction(2, 1, 1, 2, 2)
    with pytest.raises(ValueError):
        check_t2(2, 1, 3, 2)


keys = st.integers(1, 3).flatmap(
    lambda k: st.tuples(st.just(k), st.integers(1, 5)).flatmap(
        lambda kl: st.tuples(
            st.just(kl[0]), st.just(kl[1]), st.integers(-1, kl[0] * kl[1] + 1), st.integers(0, kl[0])
        )
    )
)


@given(keys)
@settings(max_examples=150, deadline=None)
def test_recurrences_hold_on_random_keys(key):
    k, L, a, p = key
    assert check_symmetry(L, a, p, k)
    assert check_fundamental_recurrence(L, a, p, k)
    assert check_unappealing_recurrence(L, a, p, k)
    for r in range(p + 1):
        assert check_superscript_reduction(L, a, p, r, k)
    if p < k:
        assert check_tautology(L, a, p, k)
    assert check_t2(L, a, p, k)


def test_andrews_generating_polynomial():
    assert andrews_generating_polynomial(0, 4) == {0: QPoly.one()}
    assert andrews_generating_polynomial(1, 2)[1] == P("1 + q")
    for k in range(1, 4):
        for L in range(6):
            assert andrews_generating_polynomial(k, L) == andrews_closed_form(k, L)
