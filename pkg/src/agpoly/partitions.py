"""Brute-force partition oracles.

Everything in this module is computed by enumerating the combinatorial objects
themselves, so the closed forms elsewhere in the package can be checked
against an independent ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .qpoly import QPoly, TruncatedSeries, q_pochhammer_inverse_series
from .qcomb import gaussian_binomial

__all__ = [
    "Partition",
    "FrequencyVector",
    "DurfeeDissection",
    "enumerate_frequency_partitions",
    "gen_func_bruteforce",
    "gen_func_recursive",
    "check_grec",
    "grec_holds_at",
    "partitions_in_box",
    "durfee_square_size",
    "durfee_rectangle_size",
    "dissect",
    "is_admissible",
    "gen_func_admissible",
    "admissible_by_a",
    "add_column",
    "remove_column",
    "conjugate",
    "successive_ranks",
    "gen_func_rank_restricted",
    "alder_limit_series",
    "InadmissibleError",
]


class InadmissibleError(ValueError):
    """A Durfee-dissection map was handed a partition outside its domain."""


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        if any(parts[j] < parts[j + 1] for j in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def row(self, j: int) -> int:
        """Length of row ``j`` (1-based), zero past the last part."""
        return self.parts[j - 1] if 1 <= j <= len(self.parts) else 0

    def to_frequency(self, L: int | None = None) -> "FrequencyVector":
        top = self.parts[0] if self.parts else 0
        if L is None:
            L = top + 1
        if top > L - 1:
            raise ValueError(f"largest part {top} does not fit below L={L}")
        f = [0] * max(L - 1, 0)
        for p in self.parts:
            f[p - 1] += 1
        return FrequencyVector(L, tuple(f))

    def __str__(self) -> str:
        return "+".join(map(str, self.parts)) or "()"


@dataclass(frozen=True)
class FrequencyVector:
    """``f[j-1]`` is the multiplicity of part ``j``, for ``j = 1..L-1``."""

    L: int
    f: tuple[int, ...]

    def __post_init__(self):
        if len(self.f) != max(self.L - 1, 0):
            raise ValueError("need exactly L-1 frequencies")
        if any(x < 0 for x in self.f):
            raise ValueError("frequencies must be nonnegative")

    @property
    def weight(self) -> int:
        return sum((j + 1) * x for j, x in enumerate(self.f))

    def to_partition(self) -> Partition:
        parts = []
        for j in range(len(self.f), 0, -1):
            parts.extend([j] * self.f[j - 1])
        return Partition(tuple(parts))


@dataclass(frozen=True)
class DurfeeDissection:
    sizes: tuple[int, ...]
    square_count: int


def _check_gordon(k: int, i: int, ip: int, L: int):
    if k < 1 or not 1 <= i <= k + 1 or not 1 <= ip <= k + 1:
        raise ValueError(f"need k >= 1 and 1 <= i, i' <= k+1 (got k={k}, i={i}, i'={ip})")
    if L < 0:
        raise ValueError("L must be nonnegative")


def enumerate_frequency_partitions(
    k: int, i: int, ip: int, L: int, max_weight: int | None = None
) -> Iterator[FrequencyVector]:
    """Stream every ``(f_1, ..., f_(L-1))`` with ``f_1 <= i-1``,
    ``f_(L-1) <= i'-1`` and ``f_j + f_(j+1) <= k``.

    With ``max_weight`` only vectors of weight ``sum j f_j <= max_weight`` are
    produced (the search is pruned, not filtered).
    """
    _check_gordon(k, i, ip, L)
    n = L - 1
    if n <= 0:
        if max_weight is None or max_weight >= 0:
            yield FrequencyVector(L, ())
        return
    f = [0] * n
    cap = max_weight

    def rec(j: int, prev: int, weight: int):
        # j is the 1-based column being filled
        hi = k - prev
        if j == 1:
            hi = min(hi, i - 1)
        if j == n:
            hi = min(hi, ip - 1)
        if cap is not None:
            hi = min(hi, (cap - weight) // j)
        for x in range(hi + 1):
            f[j - 1] = x
            if j == n:
                yield FrequencyVector(L, tuple(f))
            else:
                yield from rec(j + 1, x, weight + j * x)
        f[j - 1] = 0

    yield from rec(1, 0, 0)


def gen_func_bruteforce(k: int, i: int, ip: int, L: int, max_weight: int | None = None) -> QPoly:
    """``G_{k,i,i';L}(q)`` summed straight over the frequency vectors."""
    counts: dict[int, int] = {}
    for vec in enumerate_frequency_partitions(k, i, ip, L, max_weight):
        w = vec.weight
        counts[w] = counts.get(w, 0) + 1
    return QPoly.from_dict(counts)


@lru_cache(maxsize=4096)
def gen_func_recursive(k: int, i: int, ip: int, L: int) -> QPoly:
    """``G`` from the row-removal recurrence seeded with ``G_0 = delta(i, i')``.

    This is the second, independent route: it never enumerates a partition.
    It agrees with :func:`gen_func_bruteforce` for ``L >= 2`` and, for
    ``L <= 1``, inside the domain ``kL >= 2k - i - i' + 2``.
    """
    _check_gordon(k, i, ip, L)
    if L == 0:
        return QPoly.one() if i == ip else QPoly.zero()
    total = QPoly.zero()
    for ell in range(ip):
        total += gen_func_recursive(k, i, k - ell + 1, L - 1).shift(ell * (L - 1))
    return total


def grec_holds_at(k: int, i: int, ip: int, L: int) -> bool:
    """Whether the row-removal recurrence is expected to hold for brute-force values.

    Removing full rows from a partition is only a bijection once the first
    and last columns are distinct (``L >= 3``); below that the recurrence
    needs the seeded values, which match enumeration at ``L = 2`` and inside
    the domain at ``L = 1``.
    """
    return L >= 2 or (L == 1 and i + ip >= k + 2)


def check_grec(k: int, i: int, ip: int, L: int) -> bool:
    """Check ``G_L = sum_{l < i'} q^(l(L-1)) G_{k,i,k-l+1;L-1}`` exactly.

    Both sides are enumerated; where the smaller system has ``L - 1 <= 1``
    the seeded values stand in for it (see :func:`grec_holds_at`).
    """
    if L < 1:
        raise ValueError("the recurrence needs L >= 1")
    lhs = gen_func_bruteforce(k, i, ip, L)
    rhs = QPoly.zero()
    for ell in range(ip):
        smaller = (
            gen_func_bruteforce(k, i, k - ell + 1, L - 1)
            if L - 1 >= 2
            else gen_func_recursive(k, i, k - ell + 1, L - 1)
        )
        rhs += smaller.shift(ell * (L - 1))
    return lhs == rhs


# ----------------------------------------------------------------------------
# Durfee squares, rectangles and dissections


def partitions_in_box(max_part: int, max_len: int) -> Iterator[Partition]:
    """Every partition with largest part ``<= max_part`` and at most ``max_len`` parts."""
    parts: list[int] = []

    def rec(bound: int, room: int):
        yield Partition(tuple(parts))
        if room == 0:
            return
        for p in range(1, bound + 1):
            parts.append(p)
            yield from rec(p, room - 1)
            parts.pop()

    yield from rec(max_part, max_len)


def durfee_square_size(p: Partition | Sequence[int]) -> int:
    parts = p.parts if isinstance(p, Partition) else tuple(p)
    d = 0
    while d < len(parts) and parts[d] >= d + 1:
        d += 1
    return d


def durfee_rectangle_size(p: Partition | Sequence[int]) -> int:
    """Width of the largest ``(d+1) x d`` rectangle of nodes; ``d = 0`` always fits."""
    parts = p.parts if isinstance(p, Partition) else tuple(p)
    d = 0
    # rows 1..d+2 must all have length >= d+1, i.e. parts[d+1] >= d+1
    while d + 1 < len(parts) and parts[d + 1] >= d + 1:
        d += 1
    return d


def _dissect(parts: tuple[int, ...], k: int, i: int):
    """Sizes plus, per block, the rows it consumed; and the leftover rows."""
    sizes = []
    blocks = []
    rest = parts
    for ell in range(1, k + 1):
        if ell <= i - 1:
            n = durfee_square_size(rest)
            height = n
        else:
            n = durfee_rectangle_size(rest)
            height = n + 1 if n > 0 else 0
        sizes.append(n)
        blocks.append(rest[:height])
        rest = rest[height:]
    return tuple(sizes), blocks, rest


def dissect(p: Partition, k: int, i: int) -> DurfeeDissection:
    """The ``(k,i)``-Durfee dissection: ``i-1`` successive squares, then rectangles."""
    if k < 1 or not 1 <= i <= k + 1:
        raise ValueError("need k >= 1 and 1 <= i <= k+1")
    sizes, _, _ = _dissect(p.parts, k, i)
    return DurfeeDissection(sizes, i - 1)


def _is_ki_admissible(parts: tuple[int, ...], k: int, i: int):
    sizes, blocks, rest = _dissect(parts, k, i)
    if rest:
        return None
    for ell in range(i, k + 1):
        n = sizes[ell - 1]
        if n > 0 and blocks[ell - 1][-1] != n:
            return None
    return sizes


def is_admissible(p: Partition, k: int, i: int, L: int, a: int) -> bool:
    """``(k,i;L,a)``-admissibility: nothing below the last block, each
    rectangle's bottom row exactly its width, largest part ``<= L`` and the
    block sizes summing to ``a``."""
    if k < 1 or not 1 <= i <= k + 1:
        raise ValueError("need k >= 1 and 1 <= i <= k+1")
    if p.parts and p.parts[0] > L:
        return False
    sizes = _is_ki_admissible(p.parts, k, i)
    return sizes is not None and sum(sizes) == a


@lru_cache(maxsize=1024)
def admissible_by_a(k: int, i: int, L: int, max_a: int) -> tuple[QPoly, ...]:
    """Generating functions of ``(k,i;L,a)``-admissible partitions for ``a = 0..max_a``.

    An admissible partition whose block sizes add to ``a`` has at most
    ``a + (k - i + 1)`` parts (each rectangle adds one row), so searching
    that box is complete.
    """
    if k < 1 or not 1 <= i <= k + 1 or L < 0 or max_a < 0:
        raise ValueError("need k >= 1, 1 <= i <= k+1, L >= 0 and max_a >= 0")
    counts: list[dict[int, int]] = [dict() for _ in range(max_a + 1)]
    for p in partitions_in_box(L, max_a + k - i + 1):
        sizes = _is_ki_admissible(p.parts, k, i)
        if sizes is None:
            continue
        a = sum(sizes)
        if a <= max_a:
            w = p.weight
            counts[a][w] = counts[a].get(w, 0) + 1
    return tuple(QPoly.from_dict(c) for c in counts)


def gen_func_admissible(k: int, i: int, L: int, a: int) -> QPoly:
    if a < 0:
        return QPoly.zero()
    return admissible_by_a(k, i, L, a)[a]


def add_column(p: Partition, a: int) -> Partition:
    """Glue a column of ``a`` nodes to the left of ``p`` (which has at most ``a`` parts)."""
    if len(p) > a:
        raise InadmissibleError(f"{p} has more than {a} parts")
    rows = list(p.parts) + [0] * (a - len(p))
    return Partition(tuple(r + 1 for r in rows))


def remove_column(p: Partition, k: int, L: int) -> tuple[Partition, int]:
    """Strip the first column of a ``(k,k+1;L,a)``-admissible partition.

    Returns the smaller partition and the unique ``m`` for which it is
    ``(k,k-m+1;L-1,a-m)``-admissible.
    """
    a = len(p)
    if not is_admissible(p, k, k + 1, L, a):
        raise InadmissibleError(f"{p} is not ({k},{k + 1};{L},{a})-admissible")
    smaller = Partition(tuple(r - 1 for r in p.parts if r > 1))
    hits = [m for m in range(k + 1) if is_admissible(smaller, k, k - m + 1, L - 1, a - m)]
    if len(hits) != 1:
        raise InadmissibleError(f"column removal from {p} matched m in {hits}")
    return smaller, hits[0]


# ----------------------------------------------------------------------------
# successive ranks


def conjugate(p: Partition) -> Partition:
    if not p.parts:
        return p
    return Partition(tuple(sum(1 for r in p.parts if r >= c) for c in range(1, p.parts[0] + 1)))


def successive_ranks(p: Partition) -> list[int]:
    """``lambda_j - lambda'_j`` for ``j`` up to the Durfee square size."""
    conj = conjugate(p)
    return [p.row(j) - conj.row(j) for j in range(1, durfee_square_size(p) + 1)]


def gen_func_rank_restricted(k: int, i: int, L: int) -> QPoly:
    """Partitions in a ``floor((L+k-i+2)/2)`` by ``floor((L-k+i-1)/2)`` box whose
    successive ranks all lie in ``[2-i, 2k-i+1]``."""
    if k < 1 or not 1 <= i <= k + 1:
        raise ValueError("need k >= 1 and 1 <= i <= k+1")
    if L < k - i + 1:
        raise ValueError("needs L >= k - i + 1")
    width = (L + k - i + 2) // 2
    height = (L - k + i - 1) // 2
    lo, hi = 2 - i, 2 * k - i + 1
    counts: dict[int, int] = {}
    for p in partitions_in_box(width, height):
        if all(lo <= r <= hi for r in successive_ranks(p)):
            counts[p.weight] = counts.get(p.weight, 0) + 1
    return QPoly.from_dict(counts)


def alder_limit_series(k: int, i: int, a: int, N: int) -> TruncatedSeries:
    """Large-L limit of the admissible generating function, to order ``N``.

    ``sum over N_1+...+N_k = a`` of ``q^(N_1^2+...+N_k^2+N_i+...+N_k) / prod (q)_(n_j)``
    with ``n_j = N_j - N_(j+1)``.
    """
    total = TruncatedSeries([0], N)

    def walk(t: int, prev: int | None, rem: int, expo: int, Ns: list[int]):
        nonlocal total
        if t > k:
            if rem or expo > N:
                return
            term = TruncatedSeries.one(N).shift(expo)
            for j in range(k):
                nj = Ns[j] - (Ns[j + 1] if j + 1 < k else 0)
                term = term * q_pochhammer_inverse_series(nj, N)
            total = total + term
            return
        top = rem if prev is None else min(prev, rem)
        lo = -(-rem // (k - t + 1))
        for n in range(lo, top + 1):
            extra = n * n + (n if t >= i else 0)
            if expo + extra > N:
                break
            walk(t + 1, n, rem - n, expo + extra, Ns + [n])

    walk(1, None, a, 0, [])
    return total
