"""Exact Laurent polynomials and truncated series in q over the integers.

Coefficients are Python ints throughout; nothing here touches floating point.
Large products go through Kronecker substitution so that the heavy lifting is
done by CPython's big-integer multiplication.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Sequence

__all__ = [
    "QPoly",
    "TruncatedSeries",
    "GradedSeries",
    "poly_mul",
    "pochhammer",
    "restricted_product_series",
    "triple_product_form",
    "reciprocal_transform",
    "q_pochhammer_inverse_series",
]

# below this length schoolbook convolution beats packing into big ints
_KRONECKER_CUTOFF = 24


def _trim(min_exp: int, coeffs: list[int]) -> tuple[int, tuple[int, ...]]:
    lo = 0
    hi = len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return 0, ()
    return min_exp + lo, tuple(coeffs[lo:hi])


def _schoolbook(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj == 0:
            continue
        for i, ai in enumerate(a):
            out[i + j] += ai * bj
    return out


def _pack(coeffs: Sequence[int], nbytes: int) -> int:
    pos = bytearray()
    neg = bytearray()
    any_neg = False
    zero = bytes(nbytes)
    for c in coeffs:
        if c >= 0:
            pos += c.to_bytes(nbytes, "little")
            neg += zero
        else:
            any_neg = True
            pos += zero
            neg += (-c).to_bytes(nbytes, "little")
    value = int.from_bytes(pos, "little")
    if any_neg:
        value -= int.from_bytes(neg, "little")
    return value


def _unpack(value: int, count: int, nbytes: int) -> list[int]:
    # every digit lies in (-2^(8*nbytes-1), 2^(8*nbytes-1)); bias them into [0, 2^(8*nbytes))
    half = 1 << (8 * nbytes - 1)
    bias_chunk = half.to_bytes(nbytes, "little")
    bias = int.from_bytes(bias_chunk * count, "little")
    raw = (value + bias).to_bytes(nbytes * count, "little")
    return [
        int.from_bytes(raw[i : i + nbytes], "little") - half
        for i in range(0, nbytes * count, nbytes)
    ]


def _kronecker(a: Sequence[int], b: Sequence[int]) -> list[int]:
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    # digits must hold every product sum and also every input coefficient
    bound = max(ma * mb * min(len(a), len(b)), ma, mb)
    nbytes = (bound.bit_length() + 2) // 8 + 1
    count = len(a) + len(b) - 1
    return _unpack(_pack(a, nbytes) * _pack(b, nbytes), count, nbytes)


def _convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if min(len(a), len(b)) < _KRONECKER_CUTOFF:
        return _schoolbook(a, b)
    return _kronecker(a, b)


class QPoly:
    """Laurent polynomial ``sum_i coeffs[i] * q**(min_exp + i)``.

    Instances are immutable and always canonical: the zero polynomial has no
    coefficients, otherwise the first and last stored coefficients are nonzero.
    """

    __slots__ = ("_min_exp", "_coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = (), min_exp: int = 0):
        self._min_exp, self._coeffs = _trim(int(min_exp), [int(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, min_exp: int, coeffs: tuple[int, ...]) -> "QPoly":
        obj = cls.__new__(cls)
        obj._min_exp = min_exp
        obj._coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def _from_list(cls, min_exp: int, coeffs: list[int]) -> "QPoly":
        return cls._raw(*_trim(min_exp, coeffs))

    @classmethod
    def zero(cls) -> "QPoly":
        return cls._raw(0, ())

    @classmethod
    def one(cls) -> "QPoly":
        return cls._raw(0, (1,))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "QPoly":
        if coeff == 0:
            return cls.zero()
        return cls._raw(int(exp), (int(coeff),))

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> "QPoly":
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls.zero()
        lo, hi = min(terms), max(terms)
        coeffs = [0] * (hi - lo + 1)
        for e, c in terms.items():
            coeffs[e - lo] = int(c)
        return cls._raw(lo, tuple(coeffs))

    @property
    def min_exp(self) -> int:
        return self._min_exp

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def max_exp(self) -> int:
        return self._min_exp + len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __getitem__(self, exp: int) -> int:
        idx = exp - self._min_exp
        if 0 <= idx < len(self._coeffs):
            return self._coeffs[idx]
        return 0

    def terms(self):
        """Yield ``(exponent, coefficient)`` for the nonzero terms, ascending."""
        for idx, c in enumerate(self._coeffs):
            if c:
                yield self._min_exp + idx, c

    def at_one(self) -> int:
        return sum(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly.monomial(0, other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._min_exp == other._min_exp and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._min_exp, self._coeffs))
        return self._hash

    def _coerce(self, other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly.monomial(0, other)
        raise TypeError(f"cannot combine QPoly with {type(other).__name__}")

    def __add__(self, other) -> "QPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not other._coeffs:
            return self
        if not self._coeffs:
            return other
        lo = min(self._min_exp, other._min_exp)
        hi = max(self.max_exp, other.max_exp)
        out = [0] * (hi - lo + 1)
        off = self._min_exp - lo
        for i, c in enumerate(self._coeffs):
            out[off + i] = c
        off = other._min_exp - lo
        for i, c in enumerate(other._coeffs):
            out[off + i] += c
        return QPoly._from_list(lo, out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly._raw(self._min_exp, tuple(-c for c in self._coeffs))

    def __sub__(self, other) -> "QPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, int):
            if other == 0:
                return QPoly.zero()
            return QPoly._raw(self._min_exp, tuple(c * other for c in self._coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative powers of a QPoly are not polynomials")
        result = QPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, n: int) -> "QPoly":
        """Multiply by ``q**n``."""
        if not self._coeffs:
            return self
        return QPoly._raw(self._min_exp + n, self._coeffs)

    def truncate(self, max_exp: int) -> "QPoly":
        """Drop every term with exponent above ``max_exp``."""
        if not self._coeffs or self.max_exp <= max_exp:
            return self
        keep = max_exp - self._min_exp + 1
        if keep <= 0:
            return QPoly.zero()
        return QPoly._from_list(self._min_exp, list(self._coeffs[:keep]))

    def __repr__(self) -> str:
        return f"QPoly({self.to_str()!r})"

    def __str__(self) -> str:
        return self.to_str()

    def to_str(self, var: str = "q") -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in self.terms():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = var if e == 1 else f"{var}^{e}" if e > 0 else f"{var}^({e})"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str, var: str = "q") -> "QPoly":
        """Inverse of :meth:`to_str`."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        tokens = text.replace("- ", "-").replace("+ ", "+").split()
        terms: dict[int, int] = {}
        for tok in tokens:
            sign = 1
            if tok[0] in "+-":
                sign = -1 if tok[0] == "-" else 1
                tok = tok[1:]
            if "*" in tok:
                num, mono = tok.split("*")
                coeff = int(num)
            elif tok.startswith(var):
                coeff, mono = 1, tok
            else:
                coeff, mono = int(tok), ""
            if not mono:
                exp = 0
            elif mono == var:
                exp = 1
            else:
                exp = int(mono[len(var) + 1 :].strip("()"))
            terms[exp] = terms.get(exp, 0) + sign * coeff
        return cls.from_dict(terms)

    def to_json(self) -> dict:
        return {"min_exp": self._min_exp, "coeffs": [str(c) for c in self._coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "QPoly":
        return cls([int(c) for c in data["coeffs"]], int(data["min_exp"]))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def poly_mul(a: QPoly, b: QPoly) -> QPoly:
    """Exact product of two Laurent polynomials."""
    if not a.coeffs or not b.coeffs:
        return QPoly.zero()
    return QPoly._from_list(a.min_exp + b.min_exp, _convolve(a.coeffs, b.coeffs))


def reciprocal_transform(p: QPoly, d: int) -> QPoly:
    """Return ``q**d * p(1/q)``: the exponent ``e`` goes to ``d - e``."""
    if p.is_zero():
        return p
    return QPoly._raw(d - p.max_exp, tuple(reversed(p.coeffs)))


@lru_cache(maxsize=512)
def pochhammer(n: int) -> QPoly:
    """``(q)_n = (1-q)(1-q^2)...(1-q^n)``, with ``(q)_0 = 1``."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    if n == 0:
        return QPoly.one()
    prev = list(pochhammer(n - 1).coeffs)
    out = prev + [0] * n
    for idx, c in enumerate(prev):
        out[idx + n] -= c
    return QPoly._from_list(0, out)


class TruncatedSeries:
    """Power series in q known exactly up to and including ``q**order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[int], order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        c = [int(x) for x in coeffs][: order + 1]
        c += [0] * (order + 1 - len(c))
        self.order = order
        self.coeffs = tuple(c)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def from_poly(cls, p: QPoly, order: int) -> "TruncatedSeries":
        if p.min_exp < 0 and any(e < 0 for e, _ in p.terms()):
            raise ValueError("a power series cannot carry negative exponents")
        return cls((p[e] for e in range(order + 1)), order)

    def to_poly(self) -> QPoly:
        return QPoly(self.coeffs)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n] if 0 <= n <= self.order else 0

    def _common(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._common(other)
        return TruncatedSeries((self.coeffs[i] + other.coeffs[i] for i in range(n + 1)), n)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._common(other)
        return TruncatedSeries((self.coeffs[i] - other.coeffs[i] for i in range(n + 1)), n)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries((-c for c in self.coeffs), self.order)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries((c * other for c in self.coeffs), self.order)
        n = self._common(other)
        prod = _convolve(self.coeffs[: n + 1], other.coeffs[: n + 1])
        return TruncatedSeries(prod[: n + 1], n)

    __rmul__ = __mul__

    def shift(self, n: int) -> "TruncatedSeries":
        """Multiply by ``q**n`` (``n >= 0``), keeping the order."""
        if n < 0:
            raise ValueError("shift must be nonnegative")
        return TruncatedSeries([0] * n + list(self.coeffs), self.order)

    def inverse(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError("series inversion needs constant term +1 or -1")
        out = [0] * (self.order + 1)
        out[0] = c0
        for n in range(1, self.order + 1):
            acc = 0
            for j in range(1, n + 1):
                if self.coeffs[j]:
                    acc += self.coeffs[j] * out[n - j]
            out[n] = -acc * c0
        return TruncatedSeries(out, self.order)

    def divide_by_one_minus(self, m: int) -> "TruncatedSeries":
        """Multiply by ``1/(1 - q**m)`` for ``m >= 1``."""
        out = list(self.coeffs)
        for n in range(m, self.order + 1):
            out[n] += out[n - m]
        return TruncatedSeries(out, self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._common(other)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.to_poly().to_str()} + O(q^{self.order + 1}))"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}


def q_pochhammer_inverse_series(n: int | None, order: int) -> TruncatedSeries:
    """``1/(q)_n`` to the given order; ``n=None`` means ``1/(q)_inf``."""
    s = TruncatedSeries.one(order)
    top = order if n is None else min(n, order)
    for m in range(1, top + 1):
        s = s.divide_by_one_minus(m)
    return s


def restricted_product_series(modulus: int, excluded_residues, N: int) -> TruncatedSeries:
    """``prod (1 - q^j)^-1`` over ``j >= 1`` with ``j mod modulus`` not excluded."""
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    excluded = {r % modulus for r in excluded_residues}
    s = TruncatedSeries.one(N)
    for j in range(1, N + 1):
        if j % modulus not in excluded:
            s = s.divide_by_one_minus(j)
    return s


def triple_product_form(k: int, i: int, N: int) -> TruncatedSeries:
    """Jacobi triple-product side of Andrews' identity, truncated at ``q**N``.

    ``(q)_inf^-1 * sum_j (-1)^j q^(j((2k+3)(j+1) - 2i)/2)``.
    """
    if k < 1 or not 1 <= i <= k + 1:
        raise ValueError("need k >= 1 and 1 <= i <= k+1")
    mod = 2 * k + 3
    theta = [0] * (N + 1)

    def expo(j: int) -> int:
        return j * (mod * (j + 1) - 2 * i) // 2

    for direction in (1, -1):
        j = 0 if direction == 1 else -1
        while True:
            e = expo(j)
            if e > N and (direction * (2 * mod * j + mod - 2 * i) > 0):
                # past the vertex and beyond the cutoff: the parabola only grows
                break
            if 0 <= e <= N:
                theta[e] += -1 if j % 2 else 1
            j += direction
    return TruncatedSeries(theta, N) * q_pochhammer_inverse_series(None, N)


class GradedSeries:
    """Laurent series in ``t = q**(1/denominator)``.

    ``coeffs[idx]`` is the coefficient of ``t**(start + idx)``; every grade up
    to and including ``order`` is known exactly.
    """

    __slots__ = ("denominator", "start", "coeffs", "order")

    def __init__(self, denominator: int, terms: Mapping[int, int], order: int):
        if denominator < 1:
            raise ValueError("denominator must be positive")
        self.denominator = denominator
        self.order = order
        live = {g: c for g, c in terms.items() if c and g <= order}
        if live:
            self.start = min(live)
            self.coeffs = tuple(live.get(g, 0) for g in range(self.start, max(live) + 1))
        else:
            self.start = 0
            self.coeffs = ()

    def terms(self) -> dict[int, int]:
        return {self.start + i: c for i, c in enumerate(self.coeffs) if c}

    def valuation(self) -> Fraction | None:
        """Lowest exponent of q carrying a nonzero coefficient."""
        if not self.coeffs:
            return None
        return Fraction(self.start, self.denominator)

    def rescale(self, factor: int) -> "GradedSeries":
        """Same series over the denominator ``denominator * factor``."""
        return GradedSeries(
            self.denominator * factor,
            {g * factor: c for g, c in self.terms().items()},
            self.order * factor + factor - 1,
        )

    def _aligned(self, other: "GradedSeries"):
        lcm = self.denominator * other.denominator // gcd(self.denominator, other.denominator)
        a = self.rescale(lcm // self.denominator)
        b = other.rescale(lcm // other.denominator)
        return a, b, min(a.order, b.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedSeries):
            return NotImplemented
        a, b, top = self._aligned(other)
        ta = {g: c for g, c in a.terms().items() if g <= top}
        tb = {g: c for g, c in b.terms().items() if g <= top}
        return ta == tb

    def first_difference(self, other: "GradedSeries"):
        """Lowest q-exponent where the two series disagree, or None."""
        a, b, top = self._aligned(other)
        ta, tb = a.terms(), b.terms()
        bad = [g for g in set(ta) | set(tb) if g <= top and ta.get(g, 0) != tb.get(g, 0)]
        if not bad:
            return None
        return Fraction(min(bad), a.denominator)

    def __repr__(self) -> str:
        shown = ", ".join(f"{c}*q^({Fraction(g, self.denominator)})" for g, c in list(self.terms().items())[:8])
        return f"GradedSeries(D={self.denominator}, [{shown}, ...], order={self.order})"

    def to_json(self) -> dict:
        return {
            "denominator": self.denominator,
            "start": self.start,
            "order": self.order,
            "coeffs": [str(c) for c in self.coeffs],
        }
