"""Appell sequences of fold-symmetric multiple orthogonal polynomials.

For ``alpha_k = (k+1)_r / (r+1)^r`` the symmetric sequence has closed forms
as terminating ``1F_r`` series, is an Appell sequence, and the moments of its
orthogonality weights are products of Pochhammer symbols (the weights are
Meijer G-functions, which are identified here by their parameter lists only).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, comb, factorial

from starhess.ring import UniPoly, differentiate, format_rational, pochhammer


@lru_cache(maxsize=None)
def appell_alpha(r: int, k: int) -> Fraction:
    if r < 1 or k < 0:
        raise ValueError("need r >= 1 and k >= 0")
    return pochhammer(k + 1, r) / Fraction(r + 1) ** r


# ---------------------------------------------------------------------------
# hypergeometric parameters
# ---------------------------------------------------------------------------

def param(r: int, i: int, j: int) -> Fraction:
    """Lower parameter ``a_i`` of the ``1F_r`` series for component ``j``.

    ``j`` may be any natural number: ``a_i[(r+1)n + j] = a_i[j] + n``.
    """
    if not 1 <= i <= r:
        raise ValueError("parameter index out of range")
    n, j0 = divmod(j, r + 1)
    if i <= r - j0:
        base = Fraction(i + j0, r + 1)
    else:
        base = Fraction(i + j0 + 1, r + 1)
    return base + n


def params(r: int, j: int) -> tuple[Fraction, ...]:
    return tuple(param(r, i, j) for i in range(1, r + 1))


def hat_param(r: int, i: int, k: int) -> Fraction:
    return Fraction(i, r + 1) + ceil(Fraction(k + 1 - i, r + 1))


@dataclass(frozen=True)
class AppellParams:
    r: int

    def a(self, i: int, j: int) -> Fraction:
        return param(self.r, i, j)

    def row(self, j: int) -> tuple[Fraction, ...]:
        return params(self.r, j)

    def hat_row(self, k: int) -> tuple[Fraction, ...]:
        return tuple(hat_param(self.r, i, k) for i in range(1, self.r + 2))


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def hypergeometric_1fr(n: int, lower: tuple[Fraction, ...]) -> UniPoly:
    """Terminating series ``1F_r(-n; lower; z)`` as a polynomial in ``z``."""
    coeffs = []
    for m in range(n + 1):
        num = pochhammer(-n, m)
        den = factorial(m)
        for a in lower:
            den *= pochhammer(a, m)
        coeffs.append(num / den)
    return UniPoly(coeffs)


def hypergeometric_poly(r: int, n: int, j: int) -> UniPoly:
    """``P_{(r+1)n+j}`` from its ``1F_r`` representation."""
    if not 0 <= j <= r:
        raise ValueError("need 0 <= j <= r")
    prefactor = (-1) ** n * pochhammer(j + 1, (r + 1) * n) / (factorial(n) * Fraction(r + 1) ** ((r + 1) * n))
    series = hypergeometric_1fr(n, params(r, j))
    return series.compose_power(r + 1).shift(j).scale(prefactor)


def explicit_coeff(r: int, n: int, k: int, j: int) -> Fraction:
    """Coefficient of ``x^((r+1)k+j)`` in ``P_{(r+1)n+j}``."""
    if not 0 <= k <= n or not 0 <= j <= r:
        raise ValueError("need 0 <= k <= n and 0 <= j <= r")
    d = n - k
    return (-1) ** d * pochhammer((r + 1) * k + j + 1, (r + 1) * d) / (
        Fraction(r + 1) ** ((r + 1) * d) * factorial(d))


def explicit_poly(r: int, n: int, j: int) -> UniPoly:
    out = [Fraction(0)] * ((r + 1) * n + j + 1)
    for k in range(n + 1):
        out[(r + 1) * k + j] = explicit_coeff(r, n, k, j)
    return UniPoly(out)


def appell_sequence(r: int, max_degree: int) -> list[UniPoly]:
    """``P_0 .. P_max_degree`` through the closed form."""
    return [hypergeometric_poly(r, *divmod(d, r + 1)) for d in range(max_degree + 1)]


# ---------------------------------------------------------------------------
# Appell and scaling checks
# ---------------------------------------------------------------------------

@dataclass
class AppellReport:
    r: int
    max_n: int
    ok: bool
    failure: str | None = None
    residual: UniPoly | None = None


def scaled_general_recurrence(r: int, scale: Fraction, max_degree: int) -> list[UniPoly]:
    """Sequence with ``Q_{n+r+1} = x Q_{n+r} - alpha C(n+r, r) Q_n``,
    ``alpha = r! scale^-(r+1) (r+1)^-r``."""
    alpha = Fraction(factorial(r)) / (Fraction(scale) ** (r + 1) * Fraction(r + 1) ** r)
    qs = [UniPoly.monomial(d, Fraction(1)) for d in range(min(r, max_degree) + 1)]
    x = UniPoly.monomial(1, Fraction(1))
    for n in range(max_degree - r):
        qs.append(x * qs[n + r] - qs[n].scale(alpha * comb(n + r, r)))
    return qs


def appell_verify(r: int, max_n: int, scale=Fraction(2)) -> AppellReport:
    """Check ``P'_{n+1} = (n+1) P_n`` and the scaling family at one sample scale."""
    scale = Fraction(scale)
    if scale == 0:
        raise ValueError("scale must be nonzero")
    ps = appell_sequence(r, max_n)
    for n in range(max_n):
        residual = differentiate(ps[n + 1]) - ps[n].scale(n + 1)
        if residual:
            return AppellReport(r, max_n, False, f"derivative identity fails at n={n}", residual)
    qs = scaled_general_recurrence(r, scale, max_n)
    for n, (p, q) in enumerate(zip(ps, qs)):
        # c^-n P_n(c x)
        expected = UniPoly([c * scale ** (i - n) for i, c in enumerate(p.coeffs)])
        if expected != q:
            return AppellReport(r, max_n, False, f"scaling family fails at n={n}", expected - q)
    return AppellReport(r, max_n, True)


# ---------------------------------------------------------------------------
# moments of the Meijer G weights
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MeijerParams:
    """Parameters ``(a_1, ..., a_r)`` of ``G^{r,0}_{0,r}(x | a)``, normalised to mass one."""
    r: int
    params: tuple[Fraction, ...]

    def moment(self, n: int) -> Fraction:
        out = Fraction(1)
        for a in self.params:
            out *= pochhammer(a, n)
        return out

    def shifted(self) -> "MeijerParams":
        """Parameters after multiplying the weight by ``x``."""
        return MeijerParams(self.r, tuple(a + 1 for a in self.params))


def appell_moments(r: int, j: int, n: int) -> tuple[Fraction, MeijerParams]:
    """``n``-th moment of the ``j``-th half-line weight and its G-function parameters."""
    if not 1 <= j <= r:
        raise ValueError("need 1 <= j <= r")
    mp = MeijerParams(r, params(r, j - 1))
    return mp.moment(n), mp


def moments_json(r: int, j: int, count: int) -> dict:
    _, mp = appell_moments(r, j, 0)
    return {
        "r": r,
        "j": j,
        "meijer_params": [format_rational(a) for a in mp.params],
        "moments": [format_rational(mp.moment(n)) for n in range(count)],
    }
