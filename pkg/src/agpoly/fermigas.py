"""Restricted lattice paths as a gas of charged fermionic particles.

A path is the histogram ``f_1..f_(L-1)`` of a frequency partition.  Column
pairs whose heights add up to ``t`` carry a particle of charge ``t``.  Every
path is reached from exactly one minimal path by moving particles one unit
of height at a time to the right; moving them back recovers the content.

Conventions used throughout:

* columns are 1-based; ``f_0`` and ``f_L`` are virtual zero columns;
* a particle sits on the pair ``(c, c+1)`` named by its *label* ``c``, always
  the leftmost pair at or after the particle's minimal column whose heights
  add up to its charge;
* particles ``p_(t,1), ..., p_(t,n_t)`` are numbered from the right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, TextIO

import numpy as np

from .qcomb import gaussian_binomial
from .qpoly import QPoly

__all__ = [
    "LatticePath",
    "ParticleContent",
    "CartanData",
    "UnrealizableContentError",
    "minimal_path",
    "minimal_weight",
    "move_bounds",
    "forward_move",
    "reverse_move",
    "generate_paths",
    "reduce_to_minimal",
    "apply_moves",
    "partition_function",
    "contents",
    "dump_paths",
    "load_paths",
]


class UnrealizableContentError(ValueError):
    """The particles of a content do not fit in a path of length ``L``."""


@dataclass(frozen=True)
class LatticePath:
    heights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "heights", tuple(int(h) for h in self.heights))
        if any(h < 0 for h in self.heights):
            raise ValueError("heights must be nonnegative")

    @property
    def L(self) -> int:
        return len(self.heights) + 1

    @property
    def weight(self) -> int:
        return sum(j * h for j, h in enumerate(self.heights, start=1))

    def is_valid(self, k: int, i: int, ip: int) -> bool:
        h = self.heights
        if not h:
            return True
        if h[0] > i - 1 or h[-1] > ip - 1:
            return False
        return all(h[j] + h[j + 1] <= k for j in range(len(h) - 1)) and max(h) <= k

    def __str__(self) -> str:
        return " ".join(map(str, self.heights))


@dataclass(frozen=True)
class ParticleContent:
    n: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(int(x) for x in self.n))
        if not self.n:
            raise ValueError("content needs at least one charge")
        if any(x < 0 for x in self.n):
            raise ValueError("particle numbers must be nonnegative")

    @property
    def k(self) -> int:
        return len(self.n)

    def count(self, t: int) -> int:
        return self.n[t - 1]

    def above(self, t: int) -> int:
        """Number of particles with charge strictly greater than ``t``."""
        return sum(self.n[t:])


class CartanData:
    """``C_k``, its inverse and the tadpole incidence matrix ``I_k``."""

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("k must be positive")
        self.k = k
        idx = np.arange(1, k + 1)
        self.C_inv = np.minimum.outer(idx, idx).astype(np.int64)
        inc = np.zeros((k, k), dtype=np.int64)
        for j in range(k - 1):
            inc[j, j + 1] = inc[j + 1, j] = 1
        inc[k - 1, k - 1] = 1
        self.I = inc
        self.C = 2 * np.eye(k, dtype=np.int64) - inc

    def unit(self, j: int) -> np.ndarray:
        """``e_j``; ``e_0`` (and anything out of range) is the zero vector."""
        e = np.zeros(self.k, dtype=np.int64)
        if 1 <= j <= self.k:
            e[j - 1] = 1
        return e

    def m_vector(self, n: Sequence[int], L: int, i: int, ip: int) -> list[int]:
        """Maximal move counts ``m_t = (L-2)t + min(t,i-1) + min(t,i'-1) - 2 sum min(t,s) n_s``."""
        b = (L - 2) * self.unit(self.k) + self.unit(i - 1) + self.unit(ip - 1)
        m = self.C_inv @ (b - 2 * np.asarray(n, dtype=np.int64))
        return [int(x) for x in m]

    def quadratic_form(self, n: Sequence[int], i: int) -> int:
        nv = np.asarray(n, dtype=np.int64)
        return int(nv @ self.C_inv @ (nv + self.unit(self.k) - self.unit(i - 1)))


def _check(k: int, i: int, ip: int | None = None):
    if k < 1 or not 1 <= i <= k + 1 or (ip is not None and not 1 <= ip <= k + 1):
        raise ValueError("need k >= 1 and 1 <= i, i' <= k+1")


def _start_column(content: ParticleContent, t: int, ell: int) -> int:
    """Column of ``p_(t,ell)`` in the minimal path."""
    return 2 * content.above(t) + 2 * (content.count(t) - ell) + 1


def minimal_path(content: ParticleContent, k: int, L: int, i: int) -> LatticePath:
    """Particles packed from the left, largest charge first, one empty column
    apart.  A particle of charge ``t > i-1`` has already pushed ``t-i+1`` units
    one column to the right so the first column never exceeds ``i-1``."""
    _check(k, i)
    if content.k != k:
        raise ValueError(f"content has {content.k} charges, expected {k}")
    h = [0] * (L + 1)  # h[0] unused, h[L] is the virtual right wall
    for t in range(k, 0, -1):
        for ell in range(1, content.count(t) + 1):
            x = _start_column(content, t, ell)
            if x + 1 > L:
                raise UnrealizableContentError(f"content {content.n} needs more than L={L}")
            stay = min(t, i - 1)
            h[x] = stay
            h[x + 1] = t - stay
    if h[L]:
        raise UnrealizableContentError(f"content {content.n} spills past column {L - 1}")
    return LatticePath(tuple(h[1:L]))


def minimal_weight(content: ParticleContent, i: int) -> int:
    """``n^T C^-1 (n + e_k - e_(i-1))``."""
    return CartanData(content.k).quadratic_form(content.n, i)


def move_bounds(content: ParticleContent, L: int, i: int, ip: int) -> list[int]:
    return CartanData(content.k).m_vector(content.n, L, i, ip)


# ----------------------------------------------------------------------------
# elementary moves
#
# ``h`` is a mutable list with h[0] = h[L] = 0 as walls, so a path of length
# L occupies h[1..L-1].


def _can_transfer(h: list[int], c: int, t: int, ip: int) -> bool:
    L = len(h) - 1
    if c + 1 > L - 1 or h[c] < 1:
        return False
    if c + 1 == L - 1 and h[c + 1] + 1 > ip - 1:
        return False
    right = h[c + 2] if c + 2 <= L else 0
    return h[c + 1] + 1 + right <= t


def forward_move(h: list[int], c: int, t: int, ip: int) -> int | None:
    """Move a charge-``t`` particle at label ``c`` one step; returns the new
    label, or None if the particle is stuck (``h`` is then left untouched)."""
    L = len(h) - 1
    right_pair = h[c + 1] + (h[c + 2] if c + 2 <= L else 0)
    assert h[c] + h[c + 1] == t, "label does not point at the particle"
    assert right_pair <= t, "a pair to the right exceeds the moving charge"
    if _can_transfer(h, c, t, ip):
        h[c] -= 1
        h[c + 1] += 1
        return c
    if right_pair == t and _can_transfer(h, c + 1, t, ip):
        h[c + 1] -= 1
        h[c + 2] += 1
        return c + 1
    return None


def reverse_move(h: list[int], c: int, t: int, i: int, home: int) -> int | None:
    """Undo one elementary move of the charge-``t`` particle labelled ``c``.

    ``home`` is the particle's minimal column; it never relabels left of it.
    Returns the new label, or None when no reversed move exists.
    """
    assert h[c] + h[c + 1] == t, "label does not point at the particle"
    if h[c + 1] < 1:
        return None
    if c == home:
        # the column to the left belongs to a neighbour; stop at the minimal shape
        if h[c] + 1 > min(t, i - 1):
            return None
    elif h[c - 1] + h[c] + 1 > t:
        return None
    h[c] += 1
    h[c + 1] -= 1
    if c - 1 >= home and h[c - 1] + h[c] == t:
        return c - 1
    return c


def _pairs(h: list[int], t: int, start: int) -> list[int]:
    """Labels of charge-``t`` particles: greedy non-overlapping pairs from ``start``."""
    L = len(h) - 1
    out = []
    c = start
    while c + 1 <= L:
        s = h[c] + h[c + 1]
        if s > t:
            raise AssertionError(f"pair ({c},{c + 1}) exceeds charge {t}")
        if s == t and t > 0:
            out.append(c)
            c += 2
        else:
            c += 1
    return out


# ----------------------------------------------------------------------------
# generation and reduction


def generate_paths(
    content: ParticleContent, k: int, L: int, i: int, ip: int
) -> Iterator[LatticePath]:
    """Every path of the given content, each exactly once.

    Charges move in increasing order; within a charge the rightmost particle
    moves first and every particle makes at most as many moves as the one to
    its right, the first at most ``m_t``.
    """
    _check(k, i, ip)
    try:
        start = minimal_path(content, k, L, i)
    except UnrealizableContentError:
        return
    m = move_bounds(content, L, i, ip)
    if any(mt < 0 for mt in m):
        return
    if not start.is_valid(k, i, ip):
        return
    particles = [
        (t, _start_column(content, t, ell), m[t - 1])
        for t in range(1, k + 1)
        for ell in range(1, content.count(t) + 1)
    ]

    def rec(idx: int, h: list[int], prev_t: int, prev_e: int):
        if idx == len(particles):
            yield LatticePath(tuple(h[1:L]))
            return
        t, x, mt = particles[idx]
        cap = mt if t != prev_t else prev_e
        cur = h[:]
        c = x
        for e in range(cap + 1):
            if e:
                c = forward_move(cur, c, t, ip)
                assert c is not None, f"charge-{t} particle stuck after {e - 1} moves"
            yield from rec(idx + 1, cur[:], t, e)

    yield from rec(0, [0] + list(start.heights) + [0], 0, 0)


def reduce_to_minimal(
    path: LatticePath, k: int, i: int = None, ip: int = None
) -> tuple[ParticleContent, list[list[int]]]:
    """Move every particle back to its minimal position.

    Returns the content and, per charge ``t``, the move counts
    ``[e_1, ..., e_(n_t)]`` (``e_1`` belongs to the rightmost particle).
    """
    i = k + 1 if i is None else i
    ip = k + 1 if ip is None else ip
    _check(k, i, ip)
    if not path.is_valid(k, i, ip):
        raise ValueError(f"path {path} is not a valid (k={k}, i={i}, i'={ip}) path")
    L = path.L
    h = [0] + list(path.heights) + [0]
    n = [0] * k
    moves: list[list[int]] = [[] for _ in range(k)]
    placed = 0  # particles of larger charge already sitting at their minimal spots
    for t in range(k, 0, -1):
        x_min = 2 * placed + 1
        n_t = len(_pairs(h, t, x_min))
        n[t - 1] = n_t
        counts = []
        for j in range(n_t):
            home = x_min + 2 * j
            c = _pairs(h, t, home)[0]
            e = 0
            while True:
                nxt = reverse_move(h, c, t, i, home)
                if nxt is None:
                    break
                c = nxt
                e += 1
            if c != home:
                raise AssertionError(f"charge-{t} particle stopped at {c}, not {home}")
            counts.append(e)
        moves[t - 1] = counts[::-1]
        placed += n_t
    content = ParticleContent(tuple(n))
    if LatticePath(tuple(h[1:L])) != minimal_path(content, k, L, i):
        raise AssertionError(f"reduction of {path} did not end on a minimal path")
    return content, moves


def apply_moves(
    content: ParticleContent, moves: Sequence[Sequence[int]], k: int, L: int, i: int, ip: int
) -> LatticePath:
    """Inverse of :func:`reduce_to_minimal`: replay per-charge move counts
    (rightmost particle first) on the minimal path of ``content``."""
    _check(k, i, ip)
    if len(moves) != k or any(len(e) != content.count(t) for t, e in enumerate(moves, 1)):
        raise ValueError("need one move count per particle, grouped by charge")
    h = [0] + list(minimal_path(content, k, L, i).heights) + [0]
    for t in range(1, k + 1):
        for ell, e in enumerate(moves[t - 1], 1):
            c = _start_column(content, t, ell)
            for step in range(e):
                c = forward_move(h, c, t, ip)
                if c is None:
                    raise ValueError(f"charge-{t} particle {ell} is stuck after {step} moves")
    return LatticePath(tuple(h[1:L]))


def partition_function(content: ParticleContent, k: int, L: int, i: int, ip: int) -> QPoly:
    """``q^(n^T C^-1 (n + e_k - e_(i-1))) prod_t [n_t + m_t choose n_t]``."""
    _check(k, i, ip)
    cart = CartanData(k)
    m = cart.m_vector(content.n, L, i, ip)
    if any(mt < 0 for mt in m):
        return QPoly.zero()
    out = QPoly.monomial(cart.quadratic_form(content.n, i))
    for nt, mt in zip(content.n, m):
        out = out * gaussian_binomial(nt + mt, nt)
    return out


def contents(k: int, L: int) -> Iterator[ParticleContent]:
    """Every content with ``2(n_1 + ... + n_k) <= L``."""

    def rec(t: int, room: int, acc: list[int]):
        if t > k:
            yield ParticleContent(tuple(acc))
            return
        for x in range(room + 1):
            yield from rec(t + 1, room - x, acc + [x])

    yield from rec(1, max(L, 0) // 2, [])


def dump_paths(paths: Iterable[LatticePath], fh: TextIO) -> None:
    """One path per line, heights separated by spaces (an empty line for L <= 1)."""
    for p in paths:
        fh.write(str(p) + "\n")


def load_paths(fh: TextIO) -> list[LatticePath]:
    return [LatticePath(tuple(int(x) for x in line.split())) for line in fh]
