"""Fold-symmetric multiple orthogonal polynomials and their components.

``P_{n+r+1} = x P_{n+r} - alpha_n P_n`` with ``P_j = x^j`` for ``j <= r``
gives an (r+1)-fold symmetric r-orthogonal sequence.  Writing
``P_{(r+1)n+j}(x) = x^j P^[j]_n(x^(r+1))`` splits it into r+1 components,
each r-orthogonal with recurrence matrix ``H(r; j)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from starhess.bidiag import AlphaSpec, closed_form_entry, hessenberg_product
from starhess.errors import InsufficientMoments, SymmetryViolation
from starhess.paths import generalised_sr
from starhess.prodmat import dual_moment_matrix, output_matrix, TriangularMatrix
from starhess.ring import UniPoly, encode_element


@dataclass(frozen=True)
class SymmetricMOPS:
    r: int
    alpha: AlphaSpec
    polys: tuple[UniPoly, ...]

    @property
    def max_degree(self) -> int:
        return len(self.polys) - 1


@dataclass(frozen=True)
class ComponentSeq:
    r: int
    j: int
    polys: tuple[UniPoly, ...]


@dataclass(frozen=True)
class MomentFunctional:
    """Linear functional given by its moments ``<u, x^n>``, ``n < len(moments)``."""

    moments: tuple
    label: str = ""

    def apply(self, p: UniPoly, shift: int = 0):
        """``<u, x^shift p(x)>``."""
        need = p.degree + shift + 1
        if need > len(self.moments):
            raise InsufficientMoments(f"{self.label or 'functional'} needs {need} moments, has {len(self.moments)}")
        acc = None
        for i, c in enumerate(p.coeffs):
            if c:
                t = c * self.moments[i + shift]
                acc = t if acc is None else acc + t
        if acc is None:
            return self.moments[0] * 0 if self.moments else 0
        return acc

    def times_x(self) -> "MomentFunctional":
        return MomentFunctional(self.moments[1:], f"x*{self.label}" if self.label else "")


@dataclass(frozen=True)
class OrthogonalityEntry:
    functional: int
    k: int
    n: int
    expected: str
    value: object
    passed: bool

    def to_json(self) -> dict:
        return {"functional": self.functional, "k": self.k, "n": self.n,
                "expected": self.expected, "value": encode_element(self.value), "pass": self.passed}


@dataclass
class OrthogonalityReport:
    entries: list[OrthogonalityEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list[OrthogonalityEntry]:
        return [e for e in self.entries if not e.passed]

    def to_json(self) -> list[dict]:
        return [e.to_json() for e in self.entries]


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def symmetric_sequence(r: int, alpha: AlphaSpec, max_degree: int) -> SymmetricMOPS:
    if r < 1 or max_degree < 0:
        raise ValueError("need r >= 1 and max_degree >= 0")
    one = alpha.one
    polys = [UniPoly.monomial(d, one) for d in range(min(r, max_degree) + 1)]
    for n in range(max_degree - r):
        a = alpha[n]
        polys.append(polys[n + r].shift(1) - polys[n].scale(a))
    return SymmetricMOPS(r, alpha, tuple(polys))


def decompose(S: SymmetricMOPS) -> list[ComponentSeq]:
    m = S.r + 1
    comps: list[list[UniPoly]] = [[] for _ in range(m)]
    for deg, p in enumerate(S.polys):
        n, j = divmod(deg, m)
        for e, c in enumerate(p.coeffs):
            if c and (e - j) % m:
                raise SymmetryViolation(deg, e)
        comps[j].append(UniPoly([p.coeff(j + m * t) for t in range(n + 1)]))
    return [ComponentSeq(S.r, j, tuple(c)) for j, c in enumerate(comps)]


def recompose(C: ComponentSeq, n: int) -> UniPoly:
    """``x^j P^[j]_n(x^(r+1))``."""
    return C.polys[n].compose_power(C.r + 1).shift(C.j)


def component_gamma(r: int, j: int, alpha: AlphaSpec, n: int, k: int):
    """Recurrence coefficient ``gamma_n^[k; j]`` of the ``j``-th component."""
    if not (0 <= j <= r and 0 <= k <= r):
        raise ValueError("need 0 <= j, k <= r")
    return closed_form_entry(r, j, alpha, n, k)


@dataclass
class RecurrenceReport:
    r: int
    j: int
    ok: bool
    checked: int
    failure_n: int | None = None
    residual: UniPoly | None = None


def verify_component_recurrence(C: ComponentSeq, alpha: AlphaSpec) -> RecurrenceReport:
    """``P_{n+1} = x P_n - sum_k gamma_{n-k}^[k;j] P_{n-k}`` for every stored ``n``."""
    r, j = C.r, C.j
    ps = C.polys
    for n in range(len(ps) - 1):
        rhs = ps[n].shift(1)
        for k in range(min(r, n) + 1):
            g = component_gamma(r, j, alpha, n - k, k)
            if g:
                rhs = rhs - ps[n - k].scale(g)
        residual = ps[n + 1] - rhs
        if residual:
            return RecurrenceReport(r, j, False, n, n, residual)
    return RecurrenceReport(r, j, True, max(0, len(ps) - 1))


# ---------------------------------------------------------------------------
# moments and orthogonality
# ---------------------------------------------------------------------------

def modified_sr_moments(r: int, j: int, alpha: AlphaSpec, count: int) -> list:
    """``Z^(r;j)_n`` for ``n < count`` as column 0 of the output matrix of ``H(r; j)``."""
    H = hessenberg_product(r, j, alpha, count + 1)
    return output_matrix(H, count).column(0)


@dataclass
class DualMomentReport:
    r: int
    matrix: TriangularMatrix
    zero_pattern_ok: bool
    path_values_ok: bool
    mismatches: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.zero_pattern_ok and self.path_values_ok


def dual_moments_symmetric(r: int, alpha: AlphaSpec, M: int, path_limit: int | None = None) -> DualMomentReport:
    """Dual moment matrix of the symmetric sequence, checked against fold symmetry
    and against path enumeration at congruent indices (degrees below ``path_limit``)."""
    S = symmetric_sequence(r, alpha, M - 1)
    A = dual_moment_matrix(S.polys, M)
    m = r + 1
    zero_ok = True
    paths_ok = True
    bad = []
    for deg in range(M):
        for k in range(deg + 1):
            v = A.entry(deg, k)
            if (deg - k) % m:
                if v:
                    zero_ok = False
                    bad.append((deg, k))
            elif path_limit is None or deg < path_limit:
                kk, jj = divmod(k, m)
                nn = (deg - jj) // m
                if v != generalised_sr(r, jj, nn, kk, alpha):
                    paths_ok = False
                    bad.append((deg, k))
    return DualMomentReport(r, A, zero_ok, paths_ok, bad)


def symmetric_functionals(r: int, alpha: AlphaSpec, degree: int) -> list[MomentFunctional]:
    """``u_0 .. u_{r-1}`` with ``<u_j, x^((r+1)n+k)> = Z^(r;j)_n`` if ``k == j`` else 0."""
    m = r + 1
    out = []
    for j in range(r):
        count = (degree - j) // m + 1 if degree >= j else 0
        zs = modified_sr_moments(r, j, alpha, max(count, 1))
        zero = alpha.zero
        moms = [zs[(d - j) // m] if d >= j and (d - j) % m == 0 else zero for d in range(degree + 1)]
        out.append(MomentFunctional(tuple(moms), f"u{j}"))
    return out


def component_functionals(r: int, j: int, alpha: AlphaSpec, M: int) -> list[MomentFunctional]:
    """``(v_{j+1}, .., v_r, x v_1, .., x v_j)`` with ``M`` moments each."""
    if not 0 <= j <= r:
        raise ValueError("need 0 <= j <= r")
    base = [MomentFunctional(tuple(modified_sr_moments(r, i - 1, alpha, M + 1)), f"v{i}")
            for i in range(1, r + 1)]
    system = [base[i - 1] for i in range(j + 1, r + 1)]
    system += [base[i - 1].times_x() for i in range(1, j + 1)]
    return [MomentFunctional(f.moments[:M], f.label) for f in system]


def star_moment(r: int, j: int, m: int, alpha: AlphaSpec):
    """``m``-th moment of the ``j``-th weight on the (r+1)-star."""
    if not 1 <= j <= r:
        raise ValueError("need 1 <= j <= r")
    if m < 0:
        raise ValueError("moment order must be nonnegative")
    if (m - (j - 1)) % (r + 1):
        return alpha.zero
    n = (m - (j - 1)) // (r + 1)
    return modified_sr_moments(r, j - 1, alpha, n + 1)[n]


def orthogonality_check(P: Sequence[UniPoly], functionals: Sequence[MomentFunctional],
                        r: int, max_n: int) -> OrthogonalityReport:
    """Type II step-line conditions ``<v_i, x^k P_n>``: zero for ``n >= rk+i``,
    nonzero for ``n = rk+i-1`` (``i`` is 1-based)."""
    if len(P) <= max_n:
        raise InsufficientMoments(f"need polynomials up to degree {max_n}")
    report = OrthogonalityReport()
    for i, v in enumerate(functionals, start=1):
        k = 0
        while r * k + i - 1 <= max_n:
            for n in range(r * k + i - 1, max_n + 1):
                value = v.apply(P[n], shift=k)
                if n == r * k + i - 1:
                    report.entries.append(OrthogonalityEntry(i, k, n, "nonzero", value, bool(value)))
                else:
                    report.entries.append(OrthogonalityEntry(i, k, n, "zero", value, not value))
            k += 1
    return report
