from math import comb

import pytest

from conftest import a
from starhess.bidiag import AlphaSpec
from starhess.errors import HeightOutOfRange
from starhess.paths import (GammaTable, dyck_generating_poly, generalised_sr, genetic_sum, iter_paths,
                            jacobi_rogers_generalised, modified_sr, stieltjes_rogers)
from starhess.ring import MultiPoly

SYM = AlphaSpec.symbolic()
ONES = AlphaSpec.constant(1)


def test_dyck_examples():
    assert dyck_generating_poly(1, (0, 0), (2, 0), SYM) == a(0)
    assert dyck_generating_poly(1, (0, 0), (4, 2), SYM) == a(0) + a(1) + a(2)
    assert dyck_generating_poly(2, (0, 0), (3, 3), SYM) == 1


def test_path_listing():
    paths = sorted("".join(p) for p in iter_paths(1, (0, 0), (4, 2)))
    assert paths == ["RFRR", "RRFR", "RRRF"]
    luk = sorted(" ".join(p) for p in iter_paths(1, (0, 0), (2, 0), mode="lukasiewicz"))
    assert luk == ["L(0) L(0)", "R L(1)"]


def test_generalised_examples():
    assert generalised_sr(1, 0, 1, 0, SYM) == a(0)
    assert generalised_sr(1, 1, 1, 0, SYM) == a(0) + a(1)
    assert generalised_sr(1, 2, 0, 0, SYM) == generalised_sr(1, 0, 1, 1, SYM) == 1


def test_modified_examples():
    assert [modified_sr(1, 0, n, ONES) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert [modified_sr(2, 0, n, ONES) for n in range(5)] == [1, 1, 3, 12, 55]
    assert modified_sr(2, 1, 1, SYM) == a(0) + a(1)
    assert stieltjes_rogers(1, 2, SYM) == a(0) ** 2 + a(0) * a(1)


def test_genetic_examples():
    for r in (1, 2, 3):
        for j in range(r):
            assert genetic_sum(r, 0, j, SYM) == 1
    assert genetic_sum(2, 1, 1, SYM) == a(0) + a(1)
    assert genetic_sum(1, 2, 0, SYM) == a(0) ** 2 + a(0) * a(1)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_genetic_equals_modified(r):
    for j in range(r):
        for n in range(6):
            assert genetic_sum(r, n, j, SYM) == modified_sr(r, j, n, SYM)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_type_reduction(r):
    for q in range(3):
        for j in range(r + 1):
            for n in range(5):
                for k in range(5):
                    assert generalised_sr(r, (r + 1) * q + j, n, k, SYM) == generalised_sr(r, j, n + q, k + q, SYM)


def test_horizontal_shift_and_parity():
    for r in (1, 2):
        for y0, y1, steps in ((0, 0, 6), (2, 1, 5), (1, 3, 8)):
            base = dyck_generating_poly(r, (0, y0), (steps, y1), SYM)
            assert dyck_generating_poly(r, (7, y0), (7 + steps, y1), SYM) == base
            if (steps - (y1 - y0)) % (r + 1):
                assert base == 0


@pytest.mark.parametrize("r", [1, 2, 3])
def test_fuss_catalan(r):
    for n in range(6):
        assert modified_sr(r, 0, n, ONES) == comb((r + 1) * n, n) // (r * n + 1)


def test_jacobi_rogers_examples():
    g = GammaTable.symbolic(1, 4)
    assert jacobi_rogers_generalised(1, 3, 3, g) == 1
    want = g(0, 0) * g(0, 0) + g(1, 0)
    assert jacobi_rogers_generalised(1, 2, 0, g) == want


def test_jacobi_rogers_dyck_specialisation():
    g = GammaTable.dyck(2, SYM, 12)
    for n in range(4):
        assert jacobi_rogers_generalised(2, 3 * n, 0, g) == stieltjes_rogers(2, n, SYM)


def test_gamma_table_height_is_enforced():
    g = GammaTable.symbolic(1, 1)
    with pytest.raises(HeightOutOfRange):
        jacobi_rogers_generalised(1, 4, 0, g)


def test_symbolic_limit_is_enforced():
    from starhess.errors import InsufficientAlpha
    with pytest.raises(InsufficientAlpha):
        modified_sr(1, 0, 3, AlphaSpec.symbolic(limit=2))
    assert modified_sr(1, 0, 2, AlphaSpec.symbolic(limit=2)) == a(0) ** 2 + a(0) * a(1)


def test_empty_and_zero_weights():
    assert dyck_generating_poly(1, (3, 0), (1, 0), SYM) == 0
    assert isinstance(dyck_generating_poly(1, (0, 0), (3, 0), SYM), MultiPoly)
