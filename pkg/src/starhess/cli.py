"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails (the first
counterexample goes to stderr), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from starhess.appell import appell_verify, hypergeometric_poly, moments_json
from starhess.bidiag import AlphaSpec, hessenberg_product
from starhess.errors import InsufficientAlpha, StarhessError
from starhess.mop import (component_functionals, decompose, orthogonality_check,
                          symmetric_functionals, symmetric_sequence)
from starhess.paths import generalised_sr
from starhess.posspec import isolate_positive_simple_roots, star_zero_map, tp_check, zeros_csv
from starhess.prodmat import output_matrix, poly_sequence_from_hessenberg
from starhess.ring import MultiPoly, as_rational, encode_element, format_rational
from starhess.verify import SUITES, run_suites


class UsageError(Exception):
    pass


def _text(v) -> str:
    if isinstance(v, MultiPoly):
        return repr(v)
    return format_rational(Fraction(v))


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _need(args, *names) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for '{args.command}'")


def _check_rj(args, j_required=True) -> None:
    _need(args, "r")
    if args.r < 1:
        raise UsageError("--r must be at least 1")
    if j_required:
        _need(args, "j")
    if args.j is not None and not 0 <= args.j <= args.r:
        raise UsageError("--j must lie in 0..r")


def _alpha(args, default: str = "symbolic") -> AlphaSpec:
    try:
        return AlphaSpec.parse(args.alpha or default, args.r)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --alpha: {exc}") from None


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_hess(args) -> int:
    _check_rj(args)
    _need(args, "size")
    H = hessenberg_product(args.r, args.j, _alpha(args), args.size)
    if args.format == "csv":
        _emit(args, _csv(["row", *range(args.size)],
                         [[m, *(_text(v) for v in row)] for m, row in enumerate(H.dense())]))
    else:
        _emit(args, H.to_json())
    return 0


def cmd_paths(args) -> int:
    _check_rj(args)
    alpha = _alpha(args)
    if args.size is not None:
        cells = [(n, k) for n in range(args.size) for k in range(args.size)]
    else:
        _need(args, "n", "k")
        cells = [(args.n, args.k)]
    values = [(n, k, generalised_sr(args.r, args.j, n, k, alpha)) for n, k in cells]
    if args.format == "csv":
        _emit(args, _csv(["n", "k", "value"], [[n, k, _text(v)] for n, k, v in values]))
    else:
        _emit(args, {"r": args.r, "j": args.j,
                     "entries": [{"n": n, "k": k, "value": encode_element(v)} for n, k, v in values]})
    return 0


def cmd_mop(args) -> int:
    _check_rj(args, j_required=False)
    _need(args, "n")
    alpha = _alpha(args)
    r = args.r
    if args.j is None:
        seq = symmetric_sequence(r, alpha, args.n)
        polys = list(seq.polys)
        functionals = symmetric_functionals(r, alpha, args.n + args.n // r + 2)
    else:
        H = hessenberg_product(r, args.j, alpha, args.n + 1)
        polys = list(poly_sequence_from_hessenberg(H, args.n))
        functionals = component_functionals(r, args.j, alpha, args.n + args.n // r + 2)
    report = orthogonality_check(polys, functionals, r, args.n)
    if args.format == "csv":
        rows = [[d, e, _text(c)] for d, p in enumerate(polys) for e, c in enumerate(p.coeffs) if c]
        _emit(args, _csv(["degree", "power", "coef"], rows))
    else:
        _emit(args, {"r": r, "j": args.j, "polys": [p.to_json() for p in polys],
                     "orthogonality": report.to_json()})
    if not report.passed:
        e = report.failures()[0]
        print(f"orthogonality fails: functional {e.functional} k={e.k} n={e.n} expected {e.expected},"
              f" got {_text(e.value)}", file=sys.stderr)
        return 1
    return 0


def cmd_zeros(args) -> int:
    _check_rj(args)
    _need(args, "n")
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    alpha = _alpha(args, "appell")
    if alpha.is_symbolic:
        raise UsageError("zeros needs numeric alpha")
    width = as_rational(args.width) if args.width else Fraction(1, 2 ** 30)
    r, j, n = args.r, args.j, args.n
    comp = decompose(symmetric_sequence(r, alpha, (r + 1) * n + j))[j]
    try:
        boxes = isolate_positive_simple_roots(comp.polys[n], width)
    except StarhessError as exc:
        print(f"zero certification fails for P_{n}: {exc}", file=sys.stderr)
        return 1
    stars = star_zero_map(r, j, boxes)
    if args.format == "csv":
        _emit(args, zeros_csv(r, j, n, boxes, stars))
    else:
        _emit(args, {
            "r": r, "j": j, "n": n, "width": format_rational(width),
            "roots": [dict(zip(("lo", "hi"), b.as_strings())) for b in boxes],
            "origin_multiplicity": j,
            "star": [{"ray": s.ray, "lo": s.radius.as_strings()[0], "hi": s.radius.as_strings()[1]}
                     for s in stars if not s.is_origin],
        })
    return 0


def cmd_tp(args) -> int:
    _check_rj(args)
    _need(args, "size")
    alpha = _alpha(args)
    mode = "symbolic" if alpha.is_symbolic else "rational"
    order = args.max_minor if args.max_minor is not None else (3 if mode == "symbolic" else args.size)
    H = hessenberg_product(args.r, args.j, alpha, args.size + 1)
    if args.matrix == "S":
        M = output_matrix(H, args.size).dense()
    else:
        M = H.dense()
    res = tp_check(M, args.size, order, mode, f"{args.matrix}({args.r};{args.j})")
    if args.format == "csv":
        _emit(args, res.to_csv())
    else:
        _emit(args, {"matrix": res.matrix_id, "mode": mode, "size": res.size, "max_order": res.max_order,
                     "verdict": res.verdict,
                     "minors": [{"order": m.order, "rows": list(m.rows), "cols": list(m.cols),
                                 "value": encode_element(m.value), "nonneg": m.nonneg}
                                for m in res.reports]})
    if not res.verdict:
        bad = res.failures()[0]
        print(f"negative minor rows={bad.rows} cols={bad.cols}: {_text(bad.value)}", file=sys.stderr)
        return 1
    return 0


def cmd_appell(args) -> int:
    _need(args, "r", "n")
    if args.r < 1:
        raise UsageError("--r must be at least 1")
    r = args.r
    if args.j is not None:
        if not 1 <= args.j <= r:
            raise UsageError("--j must lie in 1..r for Appell moments")
        _emit(args, moments_json(r, args.j, args.n + 1))
        return 0
    report = appell_verify(r, args.n)
    polys = []
    for d in range(args.n + 1):
        n, j = divmod(d, r + 1)
        polys.append(hypergeometric_poly(r, n, j))
    if args.format == "csv":
        rows = [[d, e, _text(c)] for d, p in enumerate(polys) for e, c in enumerate(p.coeffs) if c]
        _emit(args, _csv(["degree", "power", "coef"], rows))
    else:
        _emit(args, {"r": r, "polys": [p.to_json() for p in polys], "appell_property": report.ok})
    if not report.ok:
        print(f"Appell check fails: {report.failure}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    results = run_suites(names, r=args.r, max_value=args.max)
    lines = "".join(res.line() + "\n" for res in results)
    if args.format == "json":
        _emit(args, [{"name": res.name, "pass": res.passed, "detail": res.detail} for res in results])
    else:
        _emit(args, lines)
    failed = [res for res in results if not res.passed]
    for res in failed:
        print(f"{res.name}: {res.detail}", file=sys.stderr)
    return 1 if failed else 0


COMMANDS = {"hess": cmd_hess, "paths": cmd_paths, "mop": cmd_mop, "zeros": cmd_zeros,
            "tp": cmd_tp, "appell": cmd_appell, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="starhess", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int)
    common.add_argument("--j", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--size", type=int)
    common.add_argument("--alpha", help="symbolic | appell | const:Q | comma-separated rationals")
    common.add_argument("--max-minor", type=int, dest="max_minor")
    common.add_argument("--width", help="root box width as p/q")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("hess", parents=[common], help="leading block of H(r; j)")
    sub.add_parser("paths", parents=[common], help="generalised Stieltjes-Rogers polynomials")
    sub.add_parser("mop", parents=[common], help="symmetric sequence or a component, with orthogonality")
    sub.add_parser("zeros", parents=[common], help="certified zeros of a component and their star images")
    tp = sub.add_parser("tp", parents=[common], help="total positivity of H(r; j) or S(r; j)")
    tp.add_argument("--matrix", choices=("H", "S"), default="H")
    sub.add_parser("appell", parents=[common], help="Appell polynomials or weight moments")
    ver = sub.add_parser("verify", parents=[common], help="run acceptance suites")
    ver.add_argument("suite", help="all or one of: " + ", ".join(SUITES))
    ver.add_argument("--max", type=int)
    ver.set_defaults(format="text")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, InsufficientAlpha) as exc:
        print(f"starhess: error: {exc}", file=sys.stderr)
        return 2
    except StarhessError as exc:
        print(f"starhess: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
