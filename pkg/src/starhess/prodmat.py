"""Production matrices, output matrices, and polynomial sequences.

A unit-lower-Hessenberg ``H`` produces the output matrix
``a[n][k] = (H^n)[0][k]`` and, through ``x P = H P``, a monic polynomial
sequence whose coefficient matrix is the inverse of that output matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from starhess.bidiag import AlphaSpec, BandedHessenberg
from starhess.errors import NotMonic, TruncationTooSmall
from starhess.paths import GammaTable
from starhess.ring import UniPoly, encode_element


@dataclass(frozen=True)
class TriangularMatrix:
    """Lower unit-triangular ``size x size`` matrix; ``rows[n]`` has ``n + 1`` entries."""

    size: int
    rows: tuple[tuple, ...]

    def entry(self, n: int, k: int):
        if k > n:
            return self.rows[n][n] * 0
        return self.rows[n][k]

    def dense(self) -> list[list]:
        return [[self.entry(n, k) for k in range(self.size)] for n in range(self.size)]

    def __matmul__(self, other: "TriangularMatrix") -> "TriangularMatrix":
        if self.size != other.size:
            raise ValueError("size mismatch")
        out = []
        for n in range(self.size):
            row = []
            for k in range(n + 1):
                acc = None
                for m in range(k, n + 1):
                    t = self.rows[n][m] * other.rows[m][k]
                    acc = t if acc is None else acc + t
                row.append(acc)
            out.append(tuple(row))
        return TriangularMatrix(self.size, tuple(out))

    def is_identity(self) -> bool:
        return all(v == (1 if n == k else 0) for n, row in enumerate(self.rows) for k, v in enumerate(row))

    def to_json(self) -> dict:
        return {"size": self.size, "rows": [[encode_element(v) for v in row] for row in self.dense()]}


@dataclass(frozen=True)
class OutputMatrix:
    size: int
    rows: tuple[tuple, ...]

    def entry(self, n: int, k: int):
        return self.rows[n][k]

    def dense(self) -> list[list]:
        return [list(r) for r in self.rows]

    def column(self, k: int) -> list:
        return [row[k] for row in self.rows]

    def to_json(self) -> dict:
        return {"size": self.size, "rows": [[encode_element(v) for v in row] for row in self.rows]}


@dataclass(frozen=True)
class PolySeq:
    polys: tuple[UniPoly, ...]

    def __getitem__(self, n):
        return self.polys[n]

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)


# ---------------------------------------------------------------------------

def output_matrix(H: BandedHessenberg, M: int) -> OutputMatrix:
    """Rows ``0..M-1`` of the output matrix, one row-vector product per row."""
    if H.size < M + 1:
        raise TruncationTooSmall(f"need a production matrix of size >= {M + 1}, got {H.size}")
    zero = H.zero
    one = zero + 1
    H_rows = H.rows()
    row = [one] + [zero] * (M - 1)
    out = [tuple(row)]
    for n in range(1, M):
        nxt = [zero] * M
        for i in range(min(n, M)):
            a = row[i]
            if not a:
                continue
            for k, h in H_rows[i].items():
                if k < M:
                    nxt[k] = nxt[k] + a * h
        row = nxt
        out.append(tuple(row))
    return OutputMatrix(M, tuple(out))


def poly_sequence_from_hessenberg(H: BandedHessenberg, M: int) -> PolySeq:
    """``P_0 .. P_M`` with ``P_{n+1} = x P_n - sum_k h[n][k] P_k``."""
    if H.size < M:
        raise TruncationTooSmall(f"need a matrix of size >= {M}, got {H.size}")
    one = H.zero + 1
    polys = [UniPoly([one])]
    for n in range(M):
        nxt = polys[n].shift(1)
        for k in range(max(0, n - H.r), n + 1):
            h = H.entry(n, k)
            if h:
                nxt = nxt - polys[k].scale(h)
        polys.append(nxt)
    return PolySeq(tuple(polys))


def coefficient_matrix(P: Sequence[UniPoly], M: int) -> TriangularMatrix:
    if len(P) < M:
        raise TruncationTooSmall(f"need {M} polynomials, got {len(P)}")
    rows = []
    for n in range(M):
        p = P[n]
        if p.degree != n or not p.is_monic():
            raise NotMonic(f"P_{n} is not monic of degree {n}")
        rows.append(tuple(p.coeffs))
    return TriangularMatrix(M, tuple(rows))


def dual_moment_matrix(P: Sequence[UniPoly], M: int) -> TriangularMatrix:
    """``A[n][k] = <u_k, x^n>`` for the dual sequence, by forward substitution."""
    B = coefficient_matrix(P, M)
    rows = []
    for n in range(M):
        one = B.rows[n][n]
        row = [None] * (n + 1)
        row[n] = one
        for k in range(n - 1, -1, -1):
            acc = one * 0
            for m in range(k + 1, n + 1):
                b = B.rows[m][k]
                if b:
                    acc = acc + row[m] * b
            row[k] = -acc
        rows.append(tuple(row))
    return TriangularMatrix(M, tuple(rows))


# ---------------------------------------------------------------------------
# other Hessenberg matrices used alongside H(r; j)
# ---------------------------------------------------------------------------

def symmetric_recurrence_matrix(r: int, alpha: AlphaSpec, N: int) -> BandedHessenberg:
    """``H(r)``: ones above the diagonal and ``h[n+r][n] = alpha_n``, zero elsewhere."""
    zero = alpha.zero
    return BandedHessenberg.from_entries(
        r, None, N, lambda n, d: alpha[n] if d == r else zero, alpha.one, zero)


def jacobi_hessenberg(r: int, gamma: GammaTable, N: int) -> BandedHessenberg:
    """``h[n+l][n] = gamma[l][n]``, the production matrix of the Jacobi-Rogers matrix."""
    return BandedHessenberg.from_entries(r, None, N, lambda n, d: gamma(d, n), gamma.one, gamma.zero)
