"""The compiled and pure-Python kernels must agree exactly."""
import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from starhess import _pykernels, kernels

try:
    from starhess import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
    if _ckernels is not None:
        assert kernels.BACKEND == "cython"


def test_pure_python_override():
    env = dict(os.environ, STARHESS_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import starhess.kernels as k; print(k.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_python_paths_reference_values():
    # five Dyck paths of length 6
    counts = _pykernels.enumerate_paths(1, 0, 6, 0, (1,))
    assert sum(counts.values()) == 5
    assert _pykernels.enumerate_paths(1, 0, 3, 0, (1,)) == {}
    assert _pykernels.enumerate_paths(2, 0, 3, 3, (2,)) == {(): 1}


def test_bareiss_reference_values():
    assert _pykernels.bareiss_det([]) == 1
    assert _pykernels.bareiss_det([[0, 1], [1, 0]]) == -1
    assert _pykernels.bareiss_det([[2, 0, 1], [1, 3, 2], [1, 1, 1]]) == 0


@needs_c
@given(st.integers(1, 3), st.integers(0, 4), st.integers(0, 14), st.integers(0, 6), st.booleans())
def test_paths_agree(r, y0, steps, y1, luk):
    downs = tuple(range(r + 1)) if luk else (r,)
    if luk:
        steps = min(steps, 9)
    assert _ckernels.enumerate_paths(r, y0, steps, y1, downs) == _pykernels.enumerate_paths(r, y0, steps, y1, downs)


square = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=n, max_size=n))


@needs_c
@given(square)
def test_bareiss_agrees(m):
    assert _ckernels.bareiss_det(m) == _pykernels.bareiss_det(m)


@given(square)
def test_bareiss_matches_fraction_elimination(m):
    from fractions import Fraction
    a = [[Fraction(v) for v in row] for row in m]
    n, det = len(a), Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            det = Fraction(0)
            break
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    assert _pykernels.bareiss_det(m) == det


@needs_c
def test_minors_agree():
    m = [[(i + 1) * (j + 2) + i * i - j for j in range(5)] for i in range(5)]
    for d in range(1, 6):
        assert _ckernels.minors_of_order(m, 5, d) == _pykernels.minors_of_order(m, 5, d)
