from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import a
from starhess.bidiag import (AlphaSpec, BandedHessenberg, build_factors, closed_form_entries,
                             closed_form_entry, hessenberg_product)
from starhess.errors import InsufficientAlpha
from starhess.paths import dyck_generating_poly
from starhess.ring import MultiPoly

SYM = AlphaSpec.symbolic()


def subdiag(f):
    return [f.dense()[i + 1][i] for i in range(f.size - 1)]


def diag(f):
    return [f.dense()[i][i] for i in range(f.size)]


def test_factors_r1():
    low, up = build_factors(1, SYM, 3)
    assert subdiag(low) == [a(1), a(3)]
    assert diag(low) == [1, 1, 1]
    assert diag(up) == [a(0), a(2), a(4)]
    assert [up.dense()[i][i + 1] for i in range(2)] == [1, 1]


def test_factors_r2():
    l1, l2, up = build_factors(2, SYM, 2)
    assert subdiag(l1) == [a(1)] and subdiag(l2) == [a(2)]
    assert diag(up) == [a(0), a(3)]


def test_factors_appell():
    l1, _, up = build_factors(2, AlphaSpec.appell(2), 2)
    assert subdiag(l1) == [Fraction(2, 3)]
    assert diag(up) == [Fraction(2, 9), Fraction(20, 9)]


def test_short_explicit_alpha():
    with pytest.raises(InsufficientAlpha):
        build_factors(2, AlphaSpec.explicit([1, 2, 3]), 2)
    with pytest.raises(InsufficientAlpha):
        hessenberg_product(1, 0, AlphaSpec.symbolic(limit=3), 2)


def test_negative_index_is_zero():
    assert SYM[-1] == 0 and AlphaSpec.appell(2)[-3] == 0


@pytest.mark.parametrize("r, j, N, want", [
    (1, 0, 2, [[a(0), 1], [a(0) * a(1), a(1) + a(2)]]),
    (1, 1, 2, [[a(0) + a(1), 1], [a(1) * a(2), a(2) + a(3)]]),
    (2, 0, 1, [[a(0)]]),
])
def test_product_examples(r, j, N, want):
    assert hessenberg_product(r, j, SYM, N).dense() == want


def test_closed_form_examples():
    for n in range(4):
        assert closed_form_entry(1, 0, SYM, n, 0) == SYM[2 * n - 1] + SYM[2 * n]
        assert closed_form_entry(1, 0, SYM, n, 1) == a(2 * n) * a(2 * n + 1)
        assert closed_form_entry(2, 0, SYM, n, 0) == SYM[3 * n - 2] + SYM[3 * n - 1] + SYM[3 * n]
    assert closed_form_entry(2, 0, SYM, 0, 1) == a(0) * a(2) + a(0) * a(1)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_oracle_equivalence(r):
    for j in range(r + 1):
        assert hessenberg_product(r, j, SYM, 8).dense() == closed_form_entries(r, j, SYM, 8).dense()


@pytest.mark.parametrize("r, j", [(r, j) for r in (1, 2, 3) for j in range(r + 1)])
def test_band_structure_and_truncation(r, j):
    small = hessenberg_product(r, j, SYM, 5)
    assert small.band_violations() == []
    assert hessenberg_product(r, j, SYM, 10).leading(5).dense() == small.dense()


@pytest.mark.parametrize("r, j", [(1, 0), (1, 1), (2, 0), (2, 2), (3, 1)])
def test_entries_are_path_counts(r, j):
    H = hessenberg_product(r, j, SYM, 4)
    for m in range(4):
        for n in range(4):
            want = dyck_generating_poly(r, (0, (r + 1) * m + j), (r + 1, (r + 1) * n + j), SYM)
            assert H.entry(m, n) == want


def test_json_round_trip():
    H = hessenberg_product(2, 1, SYM, 4)
    data = H.to_json()
    assert sorted(data["bands"], key=int) == ["-1", "0", "1", "2"]
    assert BandedHessenberg.from_json(data).dense() == H.dense()
    Ha = hessenberg_product(3, 2, AlphaSpec.appell(3), 5)
    assert BandedHessenberg.from_json(Ha.to_json()).dense() == Ha.dense()


def test_alpha_parsing():
    assert AlphaSpec.parse("symbolic").is_symbolic
    assert AlphaSpec.parse("appell", 2)[1] == Fraction(2, 3)
    assert AlphaSpec.parse("1/2, 3")[1] == 3
    assert AlphaSpec.parse("const:2/3")[100] == Fraction(2, 3)
    with pytest.raises(ValueError):
        AlphaSpec.parse("0.5,1")


@given(st.lists(st.fractions(min_value=0, max_value=10, max_denominator=20), min_size=40, max_size=40),
       st.integers(1, 3), st.data())
def test_product_commutes_with_substitution(values, r, data):
    j = data.draw(st.integers(0, r))
    num = hessenberg_product(r, j, AlphaSpec.explicit(values), 4).dense()
    sym = hessenberg_product(r, j, SYM, 4).dense()
    assign = dict(enumerate(values))
    assert [[MultiPoly._coerce(v).substitute(assign) for v in row] for row in sym] == num
