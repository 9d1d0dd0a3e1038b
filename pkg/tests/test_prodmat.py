from fractions import Fraction

import pytest

from conftest import a
from starhess.bidiag import AlphaSpec, hessenberg_product
from starhess.errors import NotMonic, TruncationTooSmall
from starhess.paths import GammaTable, generalised_sr, jacobi_rogers_generalised
from starhess.prodmat import (coefficient_matrix, dual_moment_matrix, jacobi_hessenberg, output_matrix,
                              poly_sequence_from_hessenberg, symmetric_recurrence_matrix)
from starhess.ring import UniPoly

SYM = AlphaSpec.symbolic()
ONES = AlphaSpec.constant(1)


def test_output_matrix_examples():
    out = output_matrix(hessenberg_product(1, 0, SYM, 4), 3)
    assert out.rows[0] == (1, 0, 0)
    assert out.entry(1, 0) == a(0) and out.entry(1, 1) == 1


def test_output_matrix_needs_room():
    with pytest.raises(TruncationTooSmall):
        output_matrix(hessenberg_product(1, 0, SYM, 3), 3)


@pytest.mark.parametrize("r, j", [(r, j) for r in (1, 2, 3) for j in range(r + 1)])
def test_production_matrix_theorem(r, j):
    out = output_matrix(hessenberg_product(r, j, SYM, 7), 6)
    for n in range(6):
        assert out.entry(n, n) == 1
        for k in range(6):
            assert out.entry(n, k) == generalised_sr(r, j, n, k, SYM)


@pytest.mark.parametrize("r", [1, 2])
def test_jacobi_rogers_output_matrix(r):
    g = GammaTable.symbolic(r, 8)
    out = output_matrix(jacobi_hessenberg(r, g, 7), 6)
    for n in range(6):
        for k in range(6):
            assert out.entry(n, k) == jacobi_rogers_generalised(r, n, k, g)


def test_poly_sequence_examples():
    P = poly_sequence_from_hessenberg(hessenberg_product(1, 0, ONES, 3), 2)
    assert P[2] == UniPoly([1, -3, 1])
    H2 = symmetric_recurrence_matrix(2, SYM, 4)
    Q = poly_sequence_from_hessenberg(H2, 3)
    assert Q[3] == UniPoly([-a(0), 0, 0, 1])
    H = hessenberg_product(2, 1, SYM, 3)
    P = poly_sequence_from_hessenberg(H, 1)
    assert P[0] == UniPoly([1]) and P[1] == UniPoly([-H.entry(0, 0), 1])


def test_dual_moment_examples():
    mono = [UniPoly.monomial(n, Fraction(1)) for n in range(5)]
    assert dual_moment_matrix(mono, 5).is_identity()
    P = [UniPoly([1]), UniPoly([0, 1]), UniPoly([-1, 0, 1]), UniPoly([0, -2, 0, 1])]
    A = dual_moment_matrix(P, 4)
    assert [A.entry(n, 0) for n in range(4)] == [1, 0, 1, 0]
    assert A.entry(3, 1) == 2


def test_dual_moments_give_catalan():
    from starhess.mop import symmetric_sequence
    S = symmetric_sequence(1, ONES, 8)
    A = dual_moment_matrix(S.polys, 9)
    assert [A.entry(2 * n, 0) for n in range(5)] == [1, 1, 2, 5, 14]


@pytest.mark.parametrize("r, j", [(1, 0), (2, 1), (3, 3)])
def test_duality(r, j):
    P = poly_sequence_from_hessenberg(hessenberg_product(r, j, SYM, 7), 6)
    B = coefficient_matrix(P.polys, 7)
    A = dual_moment_matrix(P.polys, 7)
    assert (B @ A).is_identity() and (A @ B).is_identity()


def test_not_monic():
    with pytest.raises(NotMonic):
        coefficient_matrix([UniPoly([1]), UniPoly([0, 2])], 2)


def test_output_matrix_json():
    # a[2][1] = h[0][0] + h[1][1] = 2/9 + 38/9
    out = output_matrix(hessenberg_product(2, 0, AlphaSpec.appell(2), 4), 3)
    assert out.to_json() == {"size": 3, "rows": [["1", "0", "0"], ["2/9", "1", "0"], ["40/81", "40/9", "1"]]}
