"""Lattice-path generating polynomials by brute-force enumeration.

This module is the combinatorial oracle: every quantity is obtained by
walking all admissible paths, never from a recurrence.  Partial r-Dyck paths
use rises ``(1, 1)`` and r-falls ``(1, -r)``; a fall ending at height ``i``
weighs ``alpha_i``.  Partial r-Lukasiewicz paths use ``(1, 1)`` and
``(1, -l)`` for ``0 <= l <= r``; such a step ending at height ``i`` weighs
``gamma[l][i]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from starhess.bidiag import AlphaSpec
from starhess.errors import HeightOutOfRange
from starhess.kernels import enumerate_paths
from starhess.ring import MultiPoly


def _weigh(counts: dict, base: int, weight, zero, one):
    total = zero
    for labels, count in counts.items():
        term = one
        for code in labels:
            h, l = divmod(code, base)
            w = weight(l, h)
            if not w:
                term = None
                break
            term = term * w
        if term is not None:
            total = total + term * count
    return total


def dyck_generating_poly(r: int, start: tuple[int, int], end: tuple[int, int], alpha: AlphaSpec):
    """Weighted count of partial r-Dyck paths from ``start`` to ``end``."""
    (x0, y0), (x1, y1) = start, end
    steps = x1 - x0
    if steps < 0 or y0 < 0 or y1 < 0 or (steps - (y1 - y0)) % (r + 1):
        return alpha.zero
    counts = enumerate_paths(r, y0, steps, y1, (r,))
    if alpha.is_symbolic and alpha.limit is None:
        return MultiPoly.from_index_counts(
            {tuple(c // (r + 1) for c in labels): n for labels, n in counts.items()})
    return _weigh(counts, r + 1, lambda l, h: alpha[h], alpha.zero, alpha.one)


def generalised_sr(r: int, j: int, n: int, k: int, alpha: AlphaSpec):
    """Paths from ``(0, 0)`` to ``((r+1)n + j, (r+1)k + j)``; any ``j >= 0``."""
    if j < 0 or n < 0 or k < 0:
        raise ValueError("j, n, k must be nonnegative")
    return dyck_generating_poly(r, (0, 0), ((r + 1) * n + j, (r + 1) * k + j), alpha)


def modified_sr(r: int, j: int, n: int, alpha: AlphaSpec):
    if not 0 <= j <= r:
        raise ValueError("need 0 <= j <= r")
    return generalised_sr(r, j, n, 0, alpha)


def stieltjes_rogers(r: int, n: int, alpha: AlphaSpec):
    return modified_sr(r, 0, n, alpha)


def genetic_sum(r: int, n: int, j: int, alpha: AlphaSpec):
    """Nested sum ``sum_{i1<=j} sum_{i2<=i1+r} ... alpha_{i1} ... alpha_{in}``."""
    if not 0 <= j <= r - 1:
        raise ValueError("need 0 <= j <= r - 1")
    memo: dict[tuple[int, int], object] = {}

    def tail(m: int, upper: int):
        if m == 0:
            return alpha.one
        key = (m, upper)
        if key not in memo:
            total = alpha.zero
            for i in range(upper + 1):
                total = total + alpha[i] * tail(m - 1, i + r)
            memo[key] = total
        return memo[key]

    return tail(n, j)


# ---------------------------------------------------------------------------
# Lukasiewicz paths
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GammaTable:
    """Dense weights ``table[l][i]`` for ``0 <= l <= r`` and ``0 <= i < height``."""

    r: int
    table: tuple[tuple, ...]
    one: object = Fraction(1)

    @property
    def height(self) -> int:
        return len(self.table[0]) if self.table else 0

    @property
    def zero(self):
        return self.one * 0

    def __call__(self, l: int, i: int):
        if not 0 <= l <= self.r:
            raise ValueError(f"step size {l} outside 0..{self.r}")
        if not 0 <= i < self.height:
            raise HeightOutOfRange(f"gamma weight at height {i} requested, table has {self.height}")
        return self.table[l][i]

    @classmethod
    def symbolic(cls, r: int, height: int) -> "GammaTable":
        """``gamma[l][i]`` is the indeterminate ``a_{(r+1) i + l}``."""
        return cls(r, tuple(tuple(MultiPoly.var((r + 1) * i + l) for i in range(height))
                            for l in range(r + 1)), MultiPoly.one())

    @classmethod
    def from_rows(cls, r: int, rows: Sequence[Sequence], one=None) -> "GammaTable":
        if len(rows) != r + 1:
            raise ValueError("need one weight row per step size 0..r")
        if one is None:
            sample = next((x for row in rows for x in row), Fraction(1))
            one = sample * 0 + 1
        return cls(r, tuple(tuple(row) for row in rows), one)

    @classmethod
    def dyck(cls, r: int, alpha: AlphaSpec, height: int) -> "GammaTable":
        """Only r-falls carry weight; recovers r-Dyck paths."""
        zero = alpha.zero
        rows = [tuple(zero for _ in range(height)) for _ in range(r)]
        rows.append(tuple(alpha[i] for i in range(height)))
        return cls(r, tuple(rows), alpha.one)


def jacobi_rogers_generalised(r: int, n: int, k: int, gamma: GammaTable):
    """Weighted count of partial r-Lukasiewicz paths ``(0,0) -> (n,k)``."""
    if gamma.r != r:
        raise ValueError("gamma table built for a different r")
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    counts = enumerate_paths(r, 0, n, k, range(r + 1))
    return _weigh(counts, r + 1, gamma, gamma.zero, gamma.one)


# ---------------------------------------------------------------------------
# explicit listing (only on request)
# ---------------------------------------------------------------------------

def iter_paths(r: int, start: tuple[int, int], end: tuple[int, int],
               mode: str = "dyck") -> Iterator[list[str]]:
    """Yield each path as step strings ``"R"``, ``"F"`` (Dyck) or ``"L(l)"`` (Lukasiewicz)."""
    (x0, y0), (x1, y1) = start, end
    steps = x1 - x0
    if steps < 0 or y0 < 0 or y1 < 0:
        return
    downs = [r] if mode == "dyck" else list(range(r + 1))
    maxdown = max(downs)
    path: list[str] = []

    def rec(h, s):
        if s == 0:
            if h == y1:
                yield list(path)
            return
        s1 = s - 1
        if h + 1 + s1 >= y1 and h + 1 - maxdown * s1 <= y1:
            path.append("R")
            yield from rec(h + 1, s1)
            path.pop()
        for l in downs:
            h2 = h - l
            if h2 >= 0 and h2 + s1 >= y1 and h2 - maxdown * s1 <= y1:
                path.append("F" if mode == "dyck" else f"L({l})")
                yield from rec(h2, s1)
                path.pop()

    yield from rec(y0, steps)
