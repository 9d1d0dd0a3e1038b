"""Bidiagonal factors and the banded Hessenberg matrices they multiply to.

``H(r; j) = L_{j+1} ... L_r U L_1 ... L_j`` where ``L_k`` is unit
lower-bidiagonal with subdiagonal ``alpha_k, alpha_{r+1+k}, ...`` and ``U`` is
upper-bidiagonal with diagonal ``alpha_0, alpha_{r+1}, ...`` and ones above.
The product is built two independent ways: by multiplying the factors
(:func:`hessenberg_product`) and from the entry formula summing over
decreasing fall positions (:func:`closed_form_entries`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from starhess.appell import appell_alpha
from starhess.errors import InsufficientAlpha
from starhess.ring import MultiPoly, as_rational, decode_element, encode_element


@dataclass(frozen=True)
class AlphaSpec:
    """The coefficient sequence ``(alpha_n)``.

    ``mode`` is one of ``"symbolic"`` (indeterminates ``a_k``), ``"explicit"``
    (a finite list of rationals), ``"appell"`` (the closed form for a given
    ``r``) or ``"constant"`` (every ``alpha_k`` equal to one rational).
    Negative indices always give the ring zero.
    """

    mode: str
    values: tuple[Fraction, ...] = ()
    r: int = 0
    limit: int | None = None
    constant_value: Fraction = Fraction(1)

    @classmethod
    def symbolic(cls, limit: int | None = None) -> "AlphaSpec":
        return cls("symbolic", limit=limit)

    @classmethod
    def explicit(cls, values: Sequence) -> "AlphaSpec":
        return cls("explicit", values=tuple(as_rational(v) for v in values))

    @classmethod
    def appell(cls, r: int) -> "AlphaSpec":
        if r < 1:
            raise ValueError("r must be positive")
        return cls("appell", r=r)

    @classmethod
    def constant(cls, value=1) -> "AlphaSpec":
        return cls("constant", constant_value=as_rational(value))

    @classmethod
    def parse(cls, text: str, r: int | None = None) -> "AlphaSpec":
        """Parse ``symbolic``, ``appell``, ``const:<q>`` or comma-separated rationals."""
        t = text.strip()
        if t == "symbolic":
            return cls.symbolic()
        if t == "appell":
            if r is None:
                raise ValueError("appell alpha needs r")
            return cls.appell(r)
        if t.startswith("const:"):
            return cls.constant(t[len("const:"):])
        return cls.explicit([v for v in t.split(",") if v.strip()])

    @property
    def is_symbolic(self) -> bool:
        return self.mode == "symbolic"

    @property
    def zero(self):
        return MultiPoly.zero() if self.is_symbolic else Fraction(0)

    @property
    def one(self):
        return MultiPoly.one() if self.is_symbolic else Fraction(1)

    @property
    def available(self) -> int | None:
        """Number of usable indices, or ``None`` when unbounded."""
        if self.mode == "explicit":
            return len(self.values)
        if self.mode == "symbolic":
            return self.limit
        return None

    def __getitem__(self, k: int):
        if k < 0:
            return self.zero
        if self.mode == "symbolic":
            if self.limit is not None and k >= self.limit:
                raise InsufficientAlpha(k, self.limit)
            return MultiPoly.var(k)
        if self.mode == "explicit":
            if k >= len(self.values):
                raise InsufficientAlpha(k, len(self.values))
            return self.values[k]
        if self.mode == "appell":
            return appell_alpha(self.r, k)
        if self.mode == "constant":
            return self.constant_value
        raise ValueError(f"unknown alpha mode {self.mode!r}")

    def get(self, k: int, default=None):
        try:
            return self[k]
        except InsufficientAlpha:
            return self.zero if default is None else default

    def require(self, count: int) -> None:
        avail = self.available
        if avail is not None and avail < count:
            raise InsufficientAlpha(count - 1, avail)

    def numeric(self, k: int) -> Fraction:
        """Rational value of ``alpha_k`` (for substitution into symbolic results)."""
        if self.is_symbolic:
            raise TypeError("symbolic alpha has no numeric value")
        return self[k]


# ---------------------------------------------------------------------------
# factors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BidiagonalFactor:
    """``L_k`` (``kind == "L"``) or ``U`` (``kind == "U"``) cut to ``size``.

    ``entries`` holds the nontrivial band: the subdiagonal of ``L_k``
    (length ``size - 1``) or the diagonal of ``U`` (length ``size``).
    """

    kind: str
    k: int
    r: int
    size: int
    entries: tuple
    one: object = field(repr=False, default=Fraction(1))

    def rows(self) -> list[dict[int, object]]:
        """Sparse rows ``{column: value}``."""
        out: list[dict[int, object]] = []
        for i in range(self.size):
            row: dict[int, object] = {}
            if self.kind == "L":
                if i >= 1 and self.entries[i - 1]:
                    row[i - 1] = self.entries[i - 1]
                row[i] = self.one
            else:
                if self.entries[i]:
                    row[i] = self.entries[i]
                if i + 1 < self.size:
                    row[i + 1] = self.one
            out.append(row)
        return out

    def dense(self) -> list[list]:
        zero = self.one * 0
        rows = self.rows()
        return [[rows[i].get(c, zero) for c in range(self.size)] for i in range(self.size)]


def _factor(kind: str, k: int, r: int, alpha: AlphaSpec, size: int, lookup) -> BidiagonalFactor:
    if kind == "L":
        entries = tuple(lookup((r + 1) * i + k) for i in range(size - 1))
    else:
        entries = tuple(lookup((r + 1) * i) for i in range(size))
    return BidiagonalFactor(kind, k, r, size, entries, alpha.one)


def build_factors(r: int, alpha: AlphaSpec, N: int) -> list[BidiagonalFactor]:
    """``[L_1, ..., L_r, U]`` truncated to ``N x N``."""
    _check_rn(r, N)
    alpha.require((r + 1) * N)
    factors = [_factor("L", k, r, alpha, N, alpha.__getitem__) for k in range(1, r + 1)]
    factors.append(_factor("U", 0, r, alpha, N, alpha.__getitem__))
    return factors


def _check_rn(r: int, N: int, j: int | None = None) -> None:
    if r < 1:
        raise ValueError("r must be positive")
    if N < 1:
        raise ValueError("size must be at least 1")
    if j is not None and not 0 <= j <= r:
        raise ValueError("need 0 <= j <= r")


def _sparse_matmul(a: list[dict], b: list[dict]) -> list[dict]:
    out = []
    for row in a:
        acc: dict[int, object] = {}
        for k, x in row.items():
            for c, y in b[k].items():
                t = x * y
                acc[c] = acc[c] + t if c in acc else t
        out.append({c: v for c, v in acc.items() if v})
    return out


# ---------------------------------------------------------------------------
# banded Hessenberg matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BandedHessenberg:
    """Leading ``size x size`` section of an (r+2)-banded unit-lower-Hessenberg matrix.

    ``bands[d][n] = h[n+d][n]`` for ``d`` in ``-1..r``; band ``-1`` (the
    supradiagonal) is indexed by column ``n >= 1``, i.e. ``bands[-1][n-1] = h[n-1][n]``.
    ``j`` is ``None`` for matrices that are not of the form ``H(r; j)``.
    """

    r: int
    j: int | None
    size: int
    bands: Mapping[int, tuple]
    zero: object = field(repr=False, default=Fraction(0), compare=False)

    def entry(self, m: int, n: int):
        if not (0 <= m < self.size and 0 <= n < self.size):
            raise IndexError((m, n))
        d = m - n
        if d == -1:
            return self.bands[-1][m]
        if 0 <= d <= self.r:
            return self.bands[d][n]
        return self.zero

    def dense(self) -> list[list]:
        return [[self.entry(m, n) for n in range(self.size)] for m in range(self.size)]

    def rows(self) -> list[dict[int, object]]:
        out = []
        for m in range(self.size):
            row = {}
            for n in range(max(0, m - self.r), min(self.size, m + 2)):
                v = self.entry(m, n)
                if v:
                    row[n] = v
            out.append(row)
        return out

    def leading(self, n: int) -> "BandedHessenberg":
        if n > self.size:
            raise ValueError("cannot extend a truncated matrix")
        return BandedHessenberg(self.r, self.j, n,
                                {d: tuple(v[: max(0, n - (1 if d == -1 else d))])
                                 for d, v in self.bands.items()},
                                self.zero)

    def map(self, fn) -> "BandedHessenberg":
        return BandedHessenberg(self.r, self.j, self.size,
                                {d: tuple(fn(x) for x in v) for d, v in self.bands.items()},
                                fn(self.zero))

    def to_json(self) -> dict:
        return {"r": self.r, "j": self.j, "size": self.size,
                "bands": {str(d): [encode_element(x) for x in self.bands[d]] for d in sorted(self.bands)}}

    @classmethod
    def from_json(cls, data: Mapping) -> "BandedHessenberg":
        bands = {int(d): tuple(decode_element(x) for x in v) for d, v in data["bands"].items()}
        sample = next((x for v in bands.values() for x in v), Fraction(0))
        return cls(data["r"], data["j"], data["size"], bands, sample * 0)

    @classmethod
    def from_dense(cls, r: int, j: int | None, rows: Sequence[Sequence], zero) -> "BandedHessenberg":
        size = len(rows)
        bands = {-1: tuple(rows[n - 1][n] for n in range(1, size))}
        for d in range(r + 1):
            bands[d] = tuple(rows[n + d][n] for n in range(size - d))
        return cls(r, j, size, bands, zero)

    @classmethod
    def from_entries(cls, r: int, j: int | None, size: int, entry, one, zero) -> "BandedHessenberg":
        """Unit supradiagonal, ``entry(n, d) = h[n+d][n]`` for ``0 <= d <= r``."""
        bands = {-1: tuple(one for _ in range(1, size))}
        for d in range(r + 1):
            bands[d] = tuple(entry(n, d) for n in range(max(0, size - d)))
        return cls(r, j, size, bands, zero)

    def band_violations(self) -> list[tuple[int, int]]:
        """Positions breaking the band shape (nonzero outside it, or non-unit supradiagonal)."""
        bad = []
        dense = self.dense()
        for m in range(self.size):
            for n in range(self.size):
                d = m - n
                v = dense[m][n]
                if d == -1:
                    if v != 1:
                        bad.append((m, n))
                elif not 0 <= d <= self.r and v:
                    bad.append((m, n))
        return bad


def hessenberg_product(r: int, j: int, alpha: AlphaSpec, N: int) -> BandedHessenberg:
    """Leading ``N x N`` block of ``L_{j+1} .. L_r U L_1 .. L_j`` by multiplying factors."""
    _check_rn(r, N, j)
    alpha.require((r + 1) * N)
    big = N + r + 1
    # Indices past the first (r+1)N only reach rows/columns >= N; zeros are safe there.
    lookup = alpha.get
    lows = [_factor("L", k, r, alpha, big, lookup) for k in range(1, r + 1)]
    up = _factor("U", 0, r, alpha, big, lookup)
    order = lows[j:] + [up] + lows[:j]
    prod = order[0].rows()
    for f in order[1:]:
        prod = _sparse_matmul(prod, f.rows())
    zero = alpha.zero
    rows = [[prod[m].get(n, zero) for n in range(N)] for m in range(N)]
    return BandedHessenberg.from_dense(r, j, rows, zero)


def closed_form_entry(r: int, j: int, alpha: AlphaSpec, n: int, k: int):
    """``h[n+k][n]`` of ``H(r; j)``: sum over ``r >= t_0 > ... > t_k >= 0``."""
    total = alpha.zero
    for ts in combinations(range(r, -1, -1), k + 1):
        term = alpha.one
        for i, t in enumerate(ts):
            a = alpha[(r + 1) * (n + i) + t + j - r]
            if not a:
                term = None
                break
            term = term * a
        if term is not None:
            total = total + term
    return total


def closed_form_entries(r: int, j: int, alpha: AlphaSpec, N: int) -> BandedHessenberg:
    _check_rn(r, N, j)
    alpha.require((r + 1) * N)
    return BandedHessenberg.from_entries(
        r, j, N, lambda n, d: closed_form_entry(r, j, alpha, n, d), alpha.one, alpha.zero)
