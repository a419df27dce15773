"""Gaussian binomials, q-multinomials and the identities they satisfy.

``M[L, a, p, k]`` below always means :func:`q_multinomial` with those
arguments; ``~M`` is the q -> 1/q companion :func:`q_multinomial_tilde`.
Out-of-range arguments give the zero polynomial instead of raising, because
the alternating sums built on top of these rely on terms silently vanishing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .qpoly import QPoly, reciprocal_transform

__all__ = [
    "MultinomialKey",
    "gaussian_binomial",
    "q_multinomial",
    "q_multinomial_tilde",
    "q_multinomial_tilde_direct",
    "classical_multinomial",
    "classical_multinomial_sum",
    "check_symmetry",
    "check_fundamental_recurrence",
    "check_tautology",
    "check_unappealing_recurrence",
    "check_superscript_reduction",
    "check_t2",
    "andrews_generating_polynomial",
    "andrews_closed_form",
]


@dataclass(frozen=True)
class MultinomialKey:
    L: int
    a: int
    p: int
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"base k must be >= 1, got {self.k}")
        if not 0 <= self.p <= self.k:
            raise ValueError(f"superscript p must lie in 0..{self.k}, got {self.p}")


@lru_cache(maxsize=4096)
def gaussian_binomial(L: int, a: int) -> QPoly:
    """``[L choose a]_q``, or zero unless ``0 <= a <= L``."""
    if a < 0 or a > L or L < 0:
        return QPoly.zero()
    a = min(a, L - a)
    # multiply by (1 - q^(L-a+j)) then divide exactly by (1 - q^j)
    c = [1]
    for j in range(1, a + 1):
        m = L - a + j
        c = c + [0] * m
        for e in range(len(c) - 1, m - 1, -1):
            c[e] -= c[e - m]
        for e in range(j, len(c)):
            c[e] += c[e - j]
        # dividing by (1 - q^j) leaves j trailing zeros from the padding
        del c[len(c) - j :]
    return QPoly(c)


def _multinomial(L: int, a: int, p: int, k: int, max_exp: int | None) -> QPoly:
    if L < 0 or a < 0 or a > k * L:
        return QPoly.zero()
    # cutoff for intermediate partial sums: the remaining factors can lower the
    # exponent by at most a (the superscript penalty), never more
    slack = None if max_exp is None else max_exp + a
    memo: dict[tuple[int, int, int], QPoly] = {}

    def tail(t: int, prev: int, rem: int) -> QPoly:
        # sum over j_t >= j_{t+1} >= ... >= j_k with j_t <= prev summing to rem
        if t > k:
            return QPoly.one() if rem == 0 else QPoly.zero()
        if rem > (k - t + 1) * prev:
            return QPoly.zero()
        key = (t, prev, rem)
        hit = memo.get(key)
        if hit is not None:
            return hit
        penalty = 1 if t >= k - p + 1 else 0
        total = QPoly.zero()
        lo = -(-rem // (k - t + 1))  # the largest of the remaining j's is at least this
        for j in range(lo, min(prev, rem) + 1):
            rest = tail(t + 1, j, rem - j)
            if rest.is_zero():
                continue
            expo = (L - prev) * j - penalty * j
            term = (gaussian_binomial(prev, j) * rest).shift(expo)
            if slack is not None:
                term = term.truncate(slack)
            total = total + term
        memo[key] = total
        return total

    out = tail(1, L, a)
    return out if max_exp is None else out.truncate(max_exp)


@lru_cache(maxsize=8192)
def _multinomial_cached(L: int, a: int, p: int, k: int) -> QPoly:
    return _multinomial(L, a, p, k, None)


def q_multinomial(L: int, a: int, p: int, k: int, max_exp: int | None = None) -> QPoly:
    """q-deformed coefficient of ``x**a`` in ``(1 + x + ... + x**k)**L``.

    Computed as the sum over chains ``L >= j_1 >= ... >= j_k >= 0`` with
    ``sum j = a`` of ``q**E * [L;j_1][j_1;j_2]...[j_(k-1);j_k]`` where
    ``E = sum_l (L - j_l) j_(l+1) - (j_(k-p+1) + ... + j_k)``.
    With ``max_exp`` the result is truncated above that exponent (and the
    intermediate work is truncated too, which is much cheaper for large L).
    """
    MultinomialKey(L if L >= 0 else 0, a, p, k)
    if max_exp is not None:
        return _multinomial(L, a, p, k, max_exp)
    return _multinomial_cached(L, a, p, k)


def _mult_or_zero(L: int, a: int, p: int, k: int) -> QPoly:
    """M[L,a,p,k] with the conventions used inside identities: p = -1 gives zero."""
    if p == -1:
        return QPoly.zero()
    return q_multinomial(L, a, p, k)


def q_multinomial_tilde(L: int, a: int, p: int, k: int) -> QPoly:
    """``~M[L,a,p,k] = q**(aL) * M[L,a,p,k](1/q)``."""
    MultinomialKey(max(L, 0), a, p, k)
    return reciprocal_transform(q_multinomial(L, a, p, k), a * L)


def q_multinomial_tilde_direct(L: int, a: int, p: int, k: int) -> QPoly:
    """``~M`` from its own sum: ``N_1+...+N_k = a`` with exponent
    ``N_1^2 + ... + N_k^2 + N_(k-p+1) + ... + N_k``."""
    MultinomialKey(max(L, 0), a, p, k)
    if L < 0 or a < 0 or a > k * L:
        return QPoly.zero()
    total = QPoly.zero()

    def walk(t: int, prev: int, rem: int, expo: int, acc: QPoly):
        nonlocal total
        if t > k:
            if rem == 0:
                total = total + acc.shift(expo)
            return
        if rem > (k - t + 1) * prev:
            return
        lo = -(-rem // (k - t + 1))
        for n in range(lo, min(prev, rem) + 1):
            extra = n * n + (n if t >= k - p + 1 else 0)
            walk(t + 1, n, rem - n, expo + extra, acc * gaussian_binomial(prev, n))

    walk(1, L, a, 0, QPoly.one())
    return total


@lru_cache(maxsize=4096)
def _power_coeffs(L: int, k: int) -> tuple[int, ...]:
    row = [1]
    for _ in range(L):
        nxt = [0] * (len(row) + k)
        for idx, c in enumerate(row):
            for d in range(k + 1):
                nxt[idx + d] += c
        row = nxt
    return tuple(row)


def classical_multinomial(L: int, a: int, k: int) -> int:
    """Coefficient of ``x**a`` in ``(1 + x + ... + x**k)**L`` by direct expansion."""
    if L < 0 or a < 0 or a > k * L:
        return 0
    return _power_coeffs(L, k)[a]


def classical_multinomial_sum(L: int, a: int, k: int) -> int:
    """Same number via the iterated binomial-theorem sum over ``j_1 + ... + j_k = a``."""
    if L < 0 or a < 0 or a > k * L:
        return 0

    def walk(t: int, prev: int, rem: int) -> int:
        if t > k:
            return 1 if rem == 0 else 0
        return sum(comb(prev, j) * walk(t + 1, j, rem - j) for j in range(0, min(prev, rem) + 1))

    return walk(1, L, a)


# ----------------------------------------------------------------------------
# identity checkers; each returns True iff the identity holds exactly


def _sides_symmetry(L, a, p, k):
    first = (
        q_multinomial(L, a, p, k),
        q_multinomial(L, k * L - a, k - p, k).shift((k - p) * L - a),
    )
    second = (q_multinomial(L, a, 0, k), q_multinomial(L, k * L - a, 0, k))
    return first, second


def check_symmetry(L: int, a: int, p: int, k: int) -> bool:
    (l1, r1), (l2, r2) = _sides_symmetry(L, a, p, k)
    return l1 == r1 and l2 == r2


def fundamental_recurrence_rhs(L: int, a: int, p: int, k: int) -> QPoly:
    total = QPoly.zero()
    for m in range(0, k - p + 1):
        total += q_multinomial(L - 1, a - m, m, k).shift(m * (L - 1))
    for m in range(k - p + 1, k + 1):
        total += q_multinomial(L - 1, a - m, m, k).shift(L * (k - p) - m)
    return total


def check_fundamental_recurrence(L: int, a: int, p: int, k: int) -> bool:
    if L < 1:
        raise ValueError("the fundamental recurrence needs L >= 1")
    return q_multinomial(L, a, p, k) == fundamental_recurrence_rhs(L, a, p, k)


def tautology_sides(L: int, a: int, p: int, k: int) -> tuple[QPoly, QPoly]:
    b = k * L - a - p - 1
    lhs = _mult_or_zero(L, a, p, k) + q_multinomial(L, b, p + 1, k).shift(L)
    rhs = _mult_or_zero(L, b, p, k) + q_multinomial(L, a, p + 1, k).shift(L)
    return lhs, rhs


def check_tautology(L: int, a: int, p: int, k: int) -> bool:
    if not -1 <= p <= k - 1:
        raise ValueError("the tautology needs -1 <= p <= k-1")
    lhs, rhs = tautology_sides(L, a, p, k)
    return lhs == rhs


def unappealing_recurrence_rhs(L: int, a: int, p: int, k: int) -> QPoly:
    total = QPoly.zero()
    for m in range(0, k - p + 1):
        if (m - p - k) % 2 == 0:
            total += q_multinomial(L - 1, a - (m - p + k) // 2, m, k).shift(m * (L - 1))
    for m in range(0, k - p):
        if (m - p - k) % 2 != 0:
            total += q_multinomial(L - 1, k * L - a - (m + p + k + 1) // 2, m, k).shift(m * (L - 1))
    for m in range(k - p + 2, k + 1):
        if (m - p - k) % 2 == 0:
            expo = ((2 * L - 1) * (k - p) - m) // 2
            total += q_multinomial(L - 1, a - (m - p + k) // 2, m, k).shift(expo)
    for m in range(k - p + 1, k + 1):
        if (m - p - k) % 2 != 0:
            expo = k * L + ((2 * L + 1) * (k - p) - m + 1) // 2 - 2 * a
            total += q_multinomial(L - 1, k * L - a - (m + p - k - 1) // 2, m, k).shift(expo)
    return total


def check_unappealing_recurrence(L: int, a: int, p: int, k: int) -> bool:
    if L < 1 or not 0 <= p <= k:
        raise ValueError("needs L >= 1 and 0 <= p <= k")
    return q_multinomial(L, a, p, k) == unappealing_recurrence_rhs(L, a, p, k)


def superscript_reduction_rhs(L: int, a: int, p: int, r: int, k: int) -> QPoly:
    total = QPoly.zero()
    for m in range(0, p - r):
        factor = QPoly.one() - QPoly.monomial(r * L)
        total += factor * q_multinomial(L - 1, k * L - a - m, m, k).shift(m * (L - 1))
    for m in range(p - r, p):
        factor = QPoly.one() - QPoly.monomial((p - m) * L)
        total += factor * q_multinomial(L - 1, k * L - a - m, m, k).shift(m * (L - 1))
    return q_multinomial(L, a, p - r, k) + total.shift(L * (k - p) - a)


def check_superscript_reduction(L: int, a: int, p: int, r: int, k: int) -> bool:
    if L < 1 or not 0 <= r <= p <= k:
        raise ValueError("needs L >= 1 and 0 <= r <= p <= k")
    return q_multinomial(L, a, p, k) == superscript_reduction_rhs(L, a, p, r, k)


def t2_sides(L: int, a: int, M: int, k: int) -> tuple[QPoly, QPoly]:
    lhs = QPoly.zero()
    rhs = QPoly.zero()
    for m in range(0, M + 1):
        lhs += q_multinomial(L, a - m, m, k).shift(m * L)
        rhs += q_multinomial(L, k * L - a - m + M, m, k).shift(m * L)
    return lhs, rhs


def check_t2(L: int, a: int, M: int, k: int) -> bool:
    if not 0 <= M <= k:
        raise ValueError("needs 0 <= M <= k")
    lhs, rhs = t2_sides(L, a, M, k)
    return lhs == rhs


def andrews_generating_polynomial(k: int, L: int) -> dict[int, QPoly]:
    """Coefficients of ``x**a`` in ``p_{k,L}(x)``, built from its recursion.

    ``p_{0,L} = 1`` and
    ``p_{k,L}(x) = sum_a x^a q^C(a,2) [L;a] p_{k-1,a}(x q^L)``.
    """
    if k < 0 or L < 0:
        raise ValueError("needs k, L >= 0")
    return dict(_andrews_gp(k, L))


@lru_cache(maxsize=1024)
def _andrews_gp(k: int, L: int) -> tuple[tuple[int, QPoly], ...]:
    if k == 0:
        return ((0, QPoly.one()),)
    out: dict[int, QPoly] = {}
    for a in range(L + 1):
        head = gaussian_binomial(L, a).shift(a * (a - 1) // 2)
        for b, coeff in _andrews_gp(k - 1, a):
            # x -> x q^L turns x^b into x^b q^(L b)
            out[a + b] = out.get(a + b, QPoly.zero()) + head * coeff.shift(L * b)
    return tuple(sorted((a, c) for a, c in out.items() if not c.is_zero()))


def andrews_closed_form(k: int, L: int) -> dict[int, QPoly]:
    """``a -> q^C(a,2) M[L,a,0,k]`` for the same generating function."""
    if k == 0:
        return {0: QPoly.one()}
    out = {}
    for a in range(k * L + 1):
        c = q_multinomial(L, a, 0, k).shift(a * (a - 1) // 2)
        if not c.is_zero():
            out[a] = c
    return out
