"""The acceptance suites.  Each check returns a :class:`CheckResult`; a failing
check carries its first counterexample in ``detail``."""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from starhess.appell import (appell_moments, appell_sequence, appell_verify,
                             explicit_poly, hypergeometric_poly)
from starhess.bidiag import AlphaSpec, closed_form_entries, hessenberg_product
from starhess.mop import (component_functionals, decompose, dual_moments_symmetric,
                          orthogonality_check, recompose, star_moment, symmetric_functionals,
                          symmetric_sequence, verify_component_recurrence)
from starhess.paths import generalised_sr, genetic_sum, modified_sr
from starhess.posspec import (interlacing_check, isolate_positive_simple_roots,
                              oscillation_check, tp_check)
from starhess.prodmat import dual_moment_matrix, output_matrix, poly_sequence_from_hessenberg
from starhess.ring import UniPoly


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail} ({self.seconds:.2f}s)"


class _Fail(Exception):
    pass


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise _Fail(message)


def _run(name: str, body) -> CheckResult:
    t0 = time.perf_counter()
    try:
        detail = body()
        ok = True
    except _Fail as exc:
        detail, ok = str(exc), False
    return CheckResult(name, ok, detail, time.perf_counter() - t0)


SYMBOLIC = AlphaSpec.symbolic()
ONES = AlphaSpec.constant(1)


# ---------------------------------------------------------------------------

def check_factorisation(max_r: int = 3, size: int = 8) -> CheckResult:
    def body():
        for r in range(1, max_r + 1):
            for j in range(r + 1):
                prod = hessenberg_product(r, j, SYMBOLIC, size).dense()
                closed = closed_form_entries(r, j, SYMBOLIC, size).dense()
                for m in range(size):
                    for n in range(size):
                        _expect(prod[m][n] == closed[m][n],
                                f"r={r} j={j} entry ({m},{n}): product {prod[m][n]!r} vs formula {closed[m][n]!r}")
        return f"r<={max_r}, all j, {size}x{size} symbolic blocks agree"
    return _run("factorisation", body)


def check_production(max_r: int = 3, max_nk: int = 5) -> CheckResult:
    def body():
        for r in range(1, max_r + 1):
            for j in range(r + 1):
                out = output_matrix(hessenberg_product(r, j, SYMBOLIC, max_nk + 2), max_nk + 1)
                for n in range(max_nk + 1):
                    for k in range(max_nk + 1):
                        want = generalised_sr(r, j, n, k, SYMBOLIC)
                        _expect(out.entry(n, k) == want,
                                f"r={r} j={j} (n,k)=({n},{k}): output {out.entry(n, k)!r} vs paths {want!r}")
        return f"output matrix equals path counts, r<={max_r}, n,k<={max_nk}"
    return _run("production", body)


def check_recurrence(max_r: int = 3, max_n: int = 6) -> CheckResult:
    def body():
        for r in range(1, max_r + 1):
            for label, alpha in (("symbolic", SYMBOLIC), ("appell", AlphaSpec.appell(r))):
                seq = symmetric_sequence(r, alpha, (r + 1) * max_n + r)
                comps = decompose(seq)
                for comp in comps:
                    j = comp.j
                    rep = verify_component_recurrence(comp, alpha)
                    _expect(rep.ok, f"{label} r={r} j={j}: recurrence fails at n={rep.failure_n}, residual {rep.residual!r}")
                    hess = poly_sequence_from_hessenberg(hessenberg_product(r, j, alpha, max_n + 1), max_n)
                    for n in range(max_n + 1):
                        _expect(comp.polys[n] == hess[n],
                                f"{label} r={r} j={j} n={n}: component {comp.polys[n]!r} vs Hessenberg {hess[n]!r}")
                        _expect(recompose(comp, n) == seq.polys[(r + 1) * n + j],
                                f"{label} r={r} j={j} n={n}: decomposition round-trip fails")
        return f"components satisfy the banded recurrence, r<={max_r}, n<={max_n}"
    return _run("recurrence", body)


def check_dual_moments(max_r: int = 3, max_nk: int = 6) -> CheckResult:
    def body():
        for r in range(1, max_r + 1):
            seq = symmetric_sequence(r, SYMBOLIC, (r + 1) * max_nk + r)
            for comp in decompose(seq):
                j = comp.j
                A = dual_moment_matrix(comp.polys, max_nk + 1)
                for n in range(max_nk + 1):
                    for k in range(n + 1):
                        want = generalised_sr(r, j, n, k, SYMBOLIC)
                        _expect(A.entry(n, k) == want,
                                f"r={r} j={j} (n,k)=({n},{k}): inverse {A.entry(n, k)!r} vs paths {want!r}")
            rep = dual_moments_symmetric(r, SYMBOLIC, (r + 1) * (max_nk + 1), path_limit=0)
            _expect(rep.zero_pattern_ok, f"r={r}: nonzero dual moment at noncongruent index {rep.mismatches[:1]}")
            # the congruent entries must be nonzero polynomials
            for n in range(rep.matrix.size):
                for k in range(n + 1):
                    if (n - k) % (r + 1) == 0:
                        _expect(bool(rep.matrix.entry(n, k)), f"r={r}: zero dual moment at congruent ({n},{k})")
        return f"inverse coefficient matrices equal path counts, zero pattern exact, r<={max_r}"
    return _run("dual_moments", body)


GOLDEN = {1: (1, 1, 2, 5, 14, 42), 2: (1, 1, 3, 12, 55), 3: (1, 1, 4, 22, 140)}


def check_golden() -> CheckResult:
    def body():
        for r, seq in GOLDEN.items():
            got = tuple(modified_sr(r, 0, n, ONES) for n in range(len(seq)))
            _expect(got == seq, f"r={r}: got {[str(v) for v in got]}, want {list(seq)}")
        return "Catalan and Fuss-Catalan counts reproduced"
    return _run("golden", body)


def check_genetic(max_r: int = 3, max_n: int = 5) -> CheckResult:
    def body():
        for r in range(1, max_r + 1):
            for j in range(r):
                for n in range(max_n + 1):
                    g, z = genetic_sum(r, n, j, SYMBOLIC), modified_sr(r, j, n, SYMBOLIC)
                    _expect(g == z, f"r={r} j={j} n={n}: nested sum {g!r} vs paths {z!r}")
        return f"nested sums equal path counts, r<={max_r}, n<={max_n}"
    return _run("genetic", body)


def check_total_positivity(max_r: int = 3, sym_size: int = 6, sym_order: int = 3,
                           rat_size: int = 8) -> CheckResult:
    def body():
        count = 0
        for r in range(1, max_r + 1):
            appell = AlphaSpec.appell(r)
            for j in range(r + 1):
                for mode, alpha, size, order in (("symbolic", SYMBOLIC, sym_size, sym_order),
                                                 ("rational", appell, rat_size, rat_size)):
                    H = hessenberg_product(r, j, alpha, size + 1)
                    S = output_matrix(H, size).dense()
                    for mid, M in ((f"H({r};{j})", H.dense()), (f"S({r};{j})", S)):
                        res = tp_check(M, size, order, mode, mid)
                        count += len(res.reports)
                        if not res.verdict:
                            bad = res.failures()[0]
                            raise _Fail(f"{mode} {mid}: minor rows={bad.rows} cols={bad.cols} = {bad.value!r}")
        return f"{count} minors nonnegative (symbolic order<={sym_order} on {sym_size}x{sym_size}, rational all orders on {rat_size}x{rat_size})"
    return _run("total_positivity", body)


WIDTH = Fraction(1, 2 ** 30)


def check_zeros(rs=(2, 3), max_n: int = 8, width=WIDTH) -> CheckResult:
    def body():
        certified = 0
        for r in rs:
            seq = symmetric_sequence(r, AlphaSpec.appell(r), (r + 1) * max_n + r)
            for comp in decompose(seq):
                prev: list = []
                for n in range(1, max_n + 1):
                    boxes = isolate_positive_simple_roots(comp.polys[n], width)
                    _expect(len(boxes) == n, f"r={r} j={comp.j} n={n}: {len(boxes)} boxes")
                    for b in boxes:
                        _expect(b.width <= width, f"r={r} j={comp.j} n={n}: box too wide")
                        p = comp.polys[n]
                        _expect(p(b.lo) * p(b.hi) < 0, f"r={r} j={comp.j} n={n}: no sign change on box")
                    _expect(interlacing_check(prev, boxes), f"r={r} j={comp.j}: P_{n - 1} and P_{n} do not interlace")
                    prev = boxes
                    certified += 1
        return f"{certified} component polynomials certified with interlacing, width<=2^-30"
    return _run("zeros", body)


def check_oscillation(max_r: int = 3, max_n: int = 6) -> CheckResult:
    def body():
        for r in range(1, max_r + 1):
            for j in range(r + 1):
                M = hessenberg_product(r, j, AlphaSpec.appell(r), max_n).dense()
                for n in range(1, max_n + 1):
                    block = [row[:n] for row in M[:n]]
                    _expect(oscillation_check(block), f"r={r} j={j}: leading {n}x{n} is not oscillatory")
        return f"leading blocks up to {max_n}x{max_n} are oscillation matrices, r<={max_r}"
    return _run("oscillation", body)


def check_appell(max_r: int = 3, max_degree: int = 24, moment_n: int = 8) -> CheckResult:
    def body():
        for r in range(1, max_r + 1):
            rec = symmetric_sequence(r, AlphaSpec.appell(r), max_degree).polys
            _expect(list(rec) == appell_sequence(r, max_degree), f"r={r}: closed form differs from recurrence")
            for d in range(max_degree + 1):
                n, j = divmod(d, r + 1)
                _expect(hypergeometric_poly(r, n, j) == rec[d], f"r={r} degree {d}: hypergeometric form differs")
                _expect(explicit_poly(r, n, j) == rec[d], f"r={r} degree {d}: explicit coefficients differ")
            rep = appell_verify(r, max_degree)
            _expect(rep.ok, f"r={r}: {rep.failure}")
            for j in range(1, r + 1):
                alpha = AlphaSpec.appell(r)
                for n in range(moment_n + 1):
                    value, _ = appell_moments(r, j, n)
                    want = modified_sr(r, j - 1, n, alpha)
                    _expect(value == want, f"r={r} j={j} n={n}: Pochhammer product {value} vs paths {want}")
                for m in range((r + 1) * 4):
                    v = star_moment(r, j, m, alpha)
                    congruent = (m - (j - 1)) % (r + 1) == 0
                    _expect((v != 0) == congruent, f"r={r} j={j} m={m}: star moment {v} breaks the zero pattern")
        hermite = symmetric_sequence(1, AlphaSpec.appell(1), 3).polys[3]
        _expect(hermite == UniPoly([0, Fraction(-3, 2), 0, 1]), f"r=1: P_3 = {hermite!r}")
        return f"closed forms, Appell property, moments and Hermite case hold, r<={max_r}, degree<={max_degree}"
    return _run("appell", body)


def check_orthogonality(max_r: int = 3) -> CheckResult:
    def body():
        entries = 0
        for r in range(1, max_r + 1):
            alpha = AlphaSpec.appell(r)
            max_n = 3 * (r + 1)
            degree = max_n + max_n // r + 2
            seq = symmetric_sequence(r, alpha, max_n)
            rep = orthogonality_check(seq.polys, symmetric_functionals(r, alpha, degree), r, max_n)
            if not rep.passed:
                e = rep.failures()[0]
                raise _Fail(f"symmetric r={r}: functional {e.functional} k={e.k} n={e.n} expected {e.expected}, got {e.value}")
            entries += len(rep.entries)
            for j in range(r + 1):
                P = poly_sequence_from_hessenberg(hessenberg_product(r, j, alpha, max_n + 1), max_n)
                rep = orthogonality_check(P.polys, component_functionals(r, j, alpha, degree), r, max_n)
                if not rep.passed:
                    e = rep.failures()[0]
                    raise _Fail(f"component r={r} j={j}: functional {e.functional} k={e.k} n={e.n} expected {e.expected}, got {e.value}")
                entries += len(rep.entries)
        return f"{entries} orthogonality conditions hold exactly, r<={max_r}"
    return _run("orthogonality", body)


SUITES = {
    "factorisation": check_factorisation,
    "production": check_production,
    "recurrence": check_recurrence,
    "dual_moments": check_dual_moments,
    "golden": check_golden,
    "genetic": check_genetic,
    "total_positivity": check_total_positivity,
    "zeros": check_zeros,
    "oscillation": check_oscillation,
    "appell": check_appell,
    "orthogonality": check_orthogonality,
}

# suites that take the --r / --max overrides from the command line
_R_PARAM = {"factorisation", "production", "recurrence", "dual_moments", "genetic",
            "total_positivity", "oscillation", "appell", "orthogonality"}
_MAX_PARAM = {"production": "max_nk", "recurrence": "max_n", "dual_moments": "max_nk",
              "genetic": "max_n", "zeros": "max_n", "oscillation": "max_n", "appell": "max_degree"}


def suite_kwargs(name: str, r: int | None = None, max_value: int | None = None) -> dict:
    kw: dict = {}
    if r is not None:
        if name in _R_PARAM:
            kw["max_r"] = r
        elif name == "zeros":
            kw["rs"] = (r,)
    if max_value is not None and name in _MAX_PARAM:
        kw[_MAX_PARAM[name]] = max_value
    return kw


def _call(args: tuple[str, dict]) -> CheckResult:
    name, kw = args
    return SUITES[name](**kw)


def worker_count() -> int:
    env = os.environ.get("STARHESS_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_suites(names, r: int | None = None, max_value: int | None = None,
               workers: int | None = None) -> list[CheckResult]:
    """Run the named suites; results come back in the order requested."""
    jobs = [(n, suite_kwargs(n, r, max_value)) for n in names]
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(jobs) <= 1:
        return [_call(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
        return list(pool.map(_call, jobs))
