"""Positivity and spectral certification.

Exact minors and total-positivity checks (coefficientwise in the symbolic
ring, by sign over the rationals), the oscillation-matrix criterion, Sturm
isolation of simple positive zeros, interlacing, and the map from component
zeros to zeros on the (r+1)-star.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from starhess.errors import CannotSeparate, IndexOutOfRange, NotSquarefree, RootsNotAllPositive
from starhess.kernels import bareiss_det, minors_of_order
from starhess.ring import MultiPoly, UniPoly, differentiate, format_rational, poly_divmod, poly_gcd

MAX_MINOR_ORDER = 8
SEPARATION_FLOOR = Fraction(1, 2 ** 256)


# ---------------------------------------------------------------------------
# minors
# ---------------------------------------------------------------------------

def _is_symbolic(matrix) -> bool:
    return any(isinstance(v, MultiPoly) for row in matrix for v in row)


def _cofactor_det(sub: list[list]):
    """Laplace expansion along rows with memoised column subsets."""
    n = len(sub)
    memo: dict[tuple[int, tuple[int, ...]], object] = {}

    def det(row: int, cols: tuple[int, ...]):
        if row == n:
            return MultiPoly.one()
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = MultiPoly.zero()
        for pos, c in enumerate(cols):
            a = sub[row][c]
            if not a:
                continue
            rest = det(row + 1, cols[:pos] + cols[pos + 1:])
            if not rest:
                continue
            term = a * rest
            total = total - term if pos % 2 else total + term
        memo[key] = total
        return total

    return det(0, tuple(range(n)))


def _integer_rows(matrix) -> tuple[list[list[int]], list[int]]:
    """Scale each row by the lcm of its denominators; returns the integer rows and the scales."""
    rows, scales = [], []
    for row in matrix:
        qs = [Fraction(v) for v in row]
        s = math.lcm(*(q.denominator for q in qs)) if qs else 1
        rows.append([int(q * s) for q in qs])
        scales.append(s)
    return rows, scales


def minor_det(M: Sequence[Sequence], rows: Sequence[int], cols: Sequence[int],
              max_order: int = MAX_MINOR_ORDER):
    """Exact determinant of the submatrix ``M[rows][cols]``."""
    if len(rows) != len(cols):
        raise IndexOutOfRange("row and column index sets differ in size")
    if len(rows) > max_order:
        raise IndexOutOfRange(f"minor order {len(rows)} exceeds bound {max_order}")
    nr = len(M)
    nc = len(M[0]) if nr else 0
    for i in rows:
        if not 0 <= i < nr:
            raise IndexOutOfRange(f"row {i} outside 0..{nr - 1}")
    for c in cols:
        if not 0 <= c < nc:
            raise IndexOutOfRange(f"column {c} outside 0..{nc - 1}")
    sub = [[M[i][c] for c in cols] for i in rows]
    if not sub:
        return 1
    if _is_symbolic(sub):
        return _cofactor_det([[MultiPoly._coerce(v) for v in row] for row in sub])
    ints, scales = _integer_rows(sub)
    return Fraction(bareiss_det(ints), math.prod(scales))


@dataclass(frozen=True)
class MinorReport:
    matrix_id: str
    order: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    value: object
    nonneg: bool


@dataclass
class TPResult:
    matrix_id: str
    mode: str
    size: int
    max_order: int
    reports: list[MinorReport] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return all(r.nonneg for r in self.reports)

    def failures(self) -> list[MinorReport]:
        return [r for r in self.reports if not r.nonneg]

    def to_csv(self) -> str:
        return minors_csv(self.reports)


def tp_check(M: Sequence[Sequence], m: int, d: int, mode: str = "rational",
             matrix_id: str = "") -> TPResult:
    """All minors of order ``<= d`` of the leading ``m x m`` block."""
    if mode not in ("symbolic", "rational"):
        raise ValueError("mode must be 'symbolic' or 'rational'")
    if m > len(M) or any(len(row) < m for row in M[:m]):
        raise ValueError(f"block size {m} exceeds the matrix")
    d = min(d, m)
    block = [list(row[:m]) for row in M[:m]]
    result = TPResult(matrix_id, mode, m, d)
    if mode == "symbolic":
        block = [[MultiPoly._coerce(v) for v in row] for row in block]
        for order in range(1, d + 1):
            for rows in combinations(range(m), order):
                for cols in combinations(range(m), order):
                    value = _cofactor_det([[block[i][c] for c in cols] for i in rows])
                    result.reports.append(MinorReport(matrix_id, order, rows, cols, value,
                                                      value.is_coefficientwise_nonnegative()))
        return result
    ints, scales = _integer_rows(block)
    for order in range(1, d + 1):
        for rows, cols, det in minors_of_order(ints, m, order):
            value = Fraction(det, math.prod(scales[i] for i in rows))
            result.reports.append(MinorReport(matrix_id, order, rows, cols, value, value >= 0))
    return result


def oscillation_check(M: Sequence[Sequence]) -> bool:
    """Totally nonnegative, nonsingular, and positive sub- and supradiagonals."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix must be square")
    if n == 0:
        return False
    for i in range(n - 1):
        if not (Fraction(M[i + 1][i]) > 0 and Fraction(M[i][i + 1]) > 0):
            return False
    if minor_det(M, range(n), range(n), max_order=n) == 0:
        return False
    return tp_check(M, n, n, "rational").verdict


# ---------------------------------------------------------------------------
# Sturm isolation
# ---------------------------------------------------------------------------

def _primitive(p: UniPoly) -> UniPoly:
    """Positive multiple of ``p`` with coprime integer coefficients."""
    qs = [Fraction(c) for c in p.coeffs]
    if not qs:
        return p
    den = math.lcm(*(q.denominator for q in qs))
    ints = [int(q * den) for q in qs]
    g = math.gcd(*ints)
    return UniPoly([Fraction(c // g) for c in ints])


def _sign(v) -> int:
    return (v > 0) - (v < 0)


class SturmChain:
    def __init__(self, p: UniPoly):
        chain = [_primitive(p), _primitive(differentiate(p))]
        while chain[-1].degree > 0:
            _, rem = poly_divmod(chain[-2], chain[-1])
            if not rem:
                break
            chain.append(_primitive(-rem))
        self.chain = chain

    def variations(self, x) -> int:
        signs = [s for s in (_sign(q(x)) for q in self.chain) if s]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, lo, hi) -> int:
        """Distinct roots in ``(lo, hi]``."""
        return self.variations(lo) - self.variations(hi)


@dataclass(frozen=True)
class RootBox:
    """Open interval ``(lo, hi)`` holding exactly one simple root of ``poly``."""

    lo: Fraction
    hi: Fraction
    poly: UniPoly = field(repr=False, compare=False, default=None)
    multiplicity: int = 1

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo < x < self.hi

    def bisect(self) -> "RootBox":
        p = self.poly
        mid = _split_point(p, self.lo, self.hi)
        if _sign(p(mid)) == _sign(p(self.lo)):
            return RootBox(mid, self.hi, p)
        return RootBox(self.lo, mid, p)

    def refine(self, width) -> "RootBox":
        box = self
        while box.width > width:
            box = box.bisect()
        return box

    def as_strings(self) -> tuple[str, str]:
        return format_rational(self.lo), format_rational(self.hi)


def _cauchy_bound(p: UniPoly) -> Fraction:
    lead = abs(Fraction(p.leading))
    return 1 + max((abs(Fraction(c)) / lead for c in p.coeffs[:-1]), default=Fraction(0))


def isolate_positive_simple_roots(p: UniPoly, width) -> list[RootBox]:
    """Certify that ``p`` is squarefree with all roots positive; return sorted boxes of width ``<= width``."""
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    p = UniPoly([Fraction(c) for c in p.coeffs])
    n = p.degree
    if n < 1:
        raise ValueError("polynomial must be nonconstant")
    if poly_gcd(p, differentiate(p)).degree > 0:
        raise NotSquarefree(f"gcd(p, p') is nonconstant for degree {n} polynomial")
    sturm = SturmChain(p)
    bound = _cauchy_bound(p)
    if p(0) == 0:
        # zero is a root, so not all roots are positive; count the positive ones
        q = p
        while q(0) == 0:
            q = poly_divmod(q, UniPoly([0, 1]))[0]
        positive = SturmChain(q).count(0, bound) if q.degree > 0 else 0
        raise RootsNotAllPositive(positive, n)
    positive = sturm.count(0, bound)
    if positive != n:
        raise RootsNotAllPositive(positive, n)

    boxes: list[RootBox] = []
    stack = [(Fraction(0), bound, positive)]
    while stack:
        lo, hi, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            boxes.append(RootBox(lo, hi, p).refine(width))
            continue
        mid = _split_point(p, lo, hi)
        left = sturm.count(lo, mid)
        stack.append((mid, hi, cnt - left))
        stack.append((lo, mid, left))
    boxes.sort(key=lambda b: b.lo)
    return boxes


def _split_point(p: UniPoly, lo: Fraction, hi: Fraction) -> Fraction:
    """A point near the middle of ``(lo, hi)`` that is not a root of ``p``."""
    den = 2
    while True:
        for num in range(1, den):
            if math.gcd(num, den) == 1:
                mid = lo + (hi - lo) * num / den
                if p(mid):
                    return mid
        den += 1


# ---------------------------------------------------------------------------
# interlacing
# ---------------------------------------------------------------------------

def _common_root_in(p: UniPoly, q: UniPoly, lo: Fraction, hi: Fraction) -> bool:
    g = poly_gcd(p, q)
    if g.degree < 1:
        return False
    if g(lo) == 0 or g(hi) == 0:
        return True
    return SturmChain(g).count(lo, hi) > 0


def interlacing_check(boxes_n: Sequence[RootBox], boxes_next: Sequence[RootBox]) -> bool:
    """``y_1 < x_1 < y_2 < ... < x_n < y_{n+1}`` for roots ``x`` of ``P_n`` and ``y`` of ``P_{n+1}``."""
    if len(boxes_next) != len(boxes_n) + 1:
        raise ValueError("need one more box for the higher-degree polynomial")
    merged: list[RootBox] = []
    for i, b in enumerate(boxes_n):
        merged += [boxes_next[i], b]
    merged.append(boxes_next[-1])
    if len(merged) == 1:
        return True
    while True:
        overlapping = [i for i in range(len(merged) - 1) if merged[i].hi > merged[i + 1].lo]
        if not overlapping:
            return True
        for i in overlapping:
            a, b = merged[i], merged[i + 1]
            # ordered the wrong way with no overlap is impossible here; handle strict reversal
            if a.lo >= b.hi:
                return False
            lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
            if _common_root_in(a.poly, b.poly, lo, hi):
                return False
        for i in set(overlapping) | {i + 1 for i in overlapping}:
            if merged[i].width < SEPARATION_FLOOR:
                raise CannotSeparate("boxes still overlap at the refinement floor")
            merged[i] = merged[i].bisect()


def interlacing_from_polys(p_n: UniPoly, p_next: UniPoly, width) -> bool:
    return interlacing_check(isolate_positive_simple_roots(p_n, width) if p_n.degree > 0 else [],
                             isolate_positive_simple_roots(p_next, width))


# ---------------------------------------------------------------------------
# star zeros
# ---------------------------------------------------------------------------

def _iroot(n: int, m: int) -> int:
    """``floor(n ** (1/m))`` for a nonnegative integer ``n``."""
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // m)
    while True:
        y = ((m - 1) * x + n // x ** (m - 1)) // m
        if y >= x:
            break
        x = y
    while x ** m > n:
        x -= 1
    while (x + 1) ** m <= n:
        x += 1
    return x


def root_lower(x: Fraction, m: int, bits: int) -> Fraction:
    """Rational ``<= x^(1/m)`` within ``2^-bits``."""
    scaled = x * (1 << (bits * m))
    return Fraction(_iroot(scaled.numerator // scaled.denominator, m), 1 << bits)


def root_upper(x: Fraction, m: int, bits: int) -> Fraction:
    """Rational ``>= x^(1/m)`` within ``2^-bits``."""
    scaled = x * (1 << (bits * m))
    n = -(-scaled.numerator // scaled.denominator)
    k = _iroot(n, m)
    if k ** m < n:
        k += 1
    return Fraction(k, 1 << bits)


@dataclass(frozen=True)
class StarZero:
    """A zero on ray ``ray`` at modulus inside ``radius``; ``radius is None`` marks the origin."""

    ray: int
    radius: RootBox | None
    origin_multiplicity: int

    @property
    def is_origin(self) -> bool:
        return self.radius is None


def star_zero_map(r: int, j: int, boxes: Sequence[RootBox], bits: int | None = None) -> list[StarZero]:
    m = r + 1
    if bits is None:
        widest = max((b.width for b in boxes), default=Fraction(1))
        bits = max(64, 8 + math.ceil(math.log2(widest.denominator / max(widest.numerator, 1)) + 1))
    out: list[StarZero] = []
    if j:
        out.append(StarZero(0, None, j))
    for b in boxes:
        rad = RootBox(root_lower(b.lo, m, bits), root_upper(b.hi, m, bits), b.poly.compose_power(m) if b.poly else None)
        out.extend(StarZero(k, rad, j) for k in range(m))
    return out


# ---------------------------------------------------------------------------
# CSV
# ---------------------------------------------------------------------------

def zeros_csv(r: int, j: int, n: int, boxes: Sequence[RootBox], stars: Sequence[StarZero]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["r", "j", "n", "index", "lo", "hi", "ray"])
    for i, b in enumerate(boxes):
        w.writerow([r, j, n, i, *b.as_strings(), ""])
    per_root = r + 1
    idx = 0
    for s in stars:
        if s.is_origin:
            w.writerow([r, j, n, "origin", "0", "0", f"multiplicity={s.origin_multiplicity}"])
            continue
        w.writerow([r, j, n, idx // per_root, *s.radius.as_strings(), s.ray])
        idx += 1
    return buf.getvalue()


def minors_csv(reports: Sequence[MinorReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["order", "rows", "cols", "nonneg", "value"])
    for rep in reports:
        value = rep.value
        text = format_rational(value) if isinstance(value, (Fraction, int)) else repr(value)
        w.writerow([rep.order, " ".join(map(str, rep.rows)), " ".join(map(str, rep.cols)),
                    "true" if rep.nonneg else "false", text])
    return buf.getvalue()
