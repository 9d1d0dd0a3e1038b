from collections import Counter
from fractions import Fraction

import pytest

from starhess.appell import (AppellParams, appell_alpha, appell_moments, appell_sequence, appell_verify,
                             explicit_coeff, explicit_poly, hypergeometric_1fr, hypergeometric_poly,
                             moments_json, scaled_general_recurrence)
from starhess.bidiag import AlphaSpec
from starhess.mop import symmetric_sequence
from starhess.paths import modified_sr
from starhess.ring import UniPoly, differentiate

F = Fraction
SYM = AlphaSpec.symbolic()


def test_alpha_examples():
    assert [appell_alpha(1, k) for k in range(3)] == [F(1, 2), F(1), F(3, 2)]
    assert [appell_alpha(2, k) for k in range(4)] == [F(2, 9), F(2, 3), F(4, 3), F(20, 9)]
    assert appell_alpha(3, 0) == F(3, 32)


def test_hypergeometric_examples():
    assert hypergeometric_1fr(1, (F(1, 3), F(2, 3))) == UniPoly([1, F(-9, 2)])
    assert hypergeometric_1fr(1, (F(2, 3), F(4, 3))) == UniPoly([1, F(-9, 8)])
    assert hypergeometric_poly(2, 1, 0) == UniPoly([F(-2, 9), 0, 0, 1])
    assert hypergeometric_poly(2, 1, 1) == UniPoly([0, F(-8, 9), 0, 0, 1])
    assert hypergeometric_poly(1, 1, 1) == UniPoly([0, F(-3, 2), 0, 1])


def test_explicit_coeff_examples():
    for r in (1, 2, 3):
        for n in range(4):
            for j in range(r + 1):
                assert explicit_coeff(r, n, n, j) == 1
    assert explicit_coeff(2, 1, 0, 0) == F(-2, 9)
    assert explicit_coeff(2, 1, 0, 1) == F(-8, 9)


def test_coefficient_signs_alternate():
    for n in range(5):
        for k in range(n + 1):
            c = explicit_coeff(3, n, k, 2)
            assert (c > 0) == ((n - k) % 2 == 0)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_closed_forms_match_recurrence(r):
    rec = symmetric_sequence(r, AlphaSpec.appell(r), 24).polys
    for d in range(25):
        n, j = divmod(d, r + 1)
        assert hypergeometric_poly(r, n, j) == explicit_poly(r, n, j) == rec[d]
    assert appell_sequence(r, 24) == list(rec)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_appell_property(r):
    rep = appell_verify(r, 24)
    assert rep.ok, rep.failure
    assert appell_verify(r, 12, scale=F(-3, 5)).ok
    assert appell_verify(r, 12, scale=1).ok


def test_appell_property_examples():
    P = appell_sequence(2, 4)
    assert differentiate(P[4]) == UniPoly([F(-8, 9), 0, 0, 4]) == P[3].scale(4)
    assert differentiate(P[1]) == P[0]


def test_scaling_family_unit_scale_is_hermite_recurrence():
    # r = 1, c = 1: the coefficient alpha * C(n+1, 1) equals (n+1)/2 = alpha_n
    Q = scaled_general_recurrence(1, F(1), 10)
    assert Q == appell_sequence(1, 10)
    P = appell_sequence(1, 10)
    x = UniPoly([0, 1])
    for n in range(1, 10):
        assert P[n + 1] == x * P[n] - P[n - 1].scale(F(n, 2))
    assert P[3] == UniPoly([0, F(-3, 2), 0, 1])


def test_parameter_rule():
    ap = AppellParams(2)
    assert ap.row(0) == (F(1, 3), F(2, 3))
    assert ap.row(1) == (F(2, 3), F(4, 3))
    assert ap.row(2) == (F(4, 3), F(5, 3))
    assert ap.a(1, 4) == ap.a(1, 1) + 1
    for r in range(1, 5):
        p = AppellParams(r)
        for j in range(r + 1):
            assert all(0 < v <= 2 for v in p.row(j))
            assert Counter(p.row(j) + (F(1),)) == Counter(p.hat_row(j))


def test_moment_examples():
    value, mp = appell_moments(2, 1, 1)
    assert value == F(2, 9) == appell_alpha(2, 0)
    assert mp.params == (F(1, 3), F(2, 3))
    assert appell_moments(2, 1, 2)[0] == F(40, 81)
    for r in (1, 2, 3):
        for j in range(1, r + 1):
            assert appell_moments(r, j, 0)[0] == 1


@pytest.mark.parametrize("r", [1, 2, 3])
def test_moments_match_paths(r):
    values = {k: appell_alpha(r, k) for k in range(64)}
    for j in range(1, r + 1):
        for n in range(7):
            sym = modified_sr(r, j - 1, n, SYM)
            assert appell_moments(r, j, n)[0] == sym.substitute(values)


def test_shifted_parameters():
    _, mp = appell_moments(2, 1, 0)
    shifted = mp.shifted()
    for n in range(6):
        assert shifted.moment(n) * mp.moment(1) == mp.moment(n + 1)


def test_moments_json():
    assert moments_json(2, 1, 3) == {"r": 2, "j": 1, "meijer_params": ["1/3", "2/3"],
                                     "moments": ["1", "2/9", "40/81"]}
