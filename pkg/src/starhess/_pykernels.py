"""Pure-Python reference versions of the hot loops in ``_ckernels.pyx``.

Both modules expose the same functions with identical results; ``kernels``
picks one at import time.
"""
from __future__ import annotations

from itertools import combinations


def enumerate_paths(r, y0, nsteps, y1, downs):
    """Depth-first enumeration of lattice paths with height >= 0.

    Steps are ``(1, 1)`` and ``(1, -l)`` for ``l`` in ``downs``.  Returns a
    dict mapping the sorted tuple of step labels ``height_after * (r+1) + l``
    of the non-rise steps to the number of paths carrying that multiset.
    """
    out = {}
    if nsteps < 0 or y0 < 0 or y1 < 0:
        return out
    downs = sorted(set(downs))
    maxdown = downs[-1] if downs else 0
    base = r + 1
    labels = []

    def rec(h, s):
        if s == 0:
            if h == y1:
                key = tuple(sorted(labels))
                out[key] = out.get(key, 0) + 1
            return
        s1 = s - 1
        h2 = h + 1
        if h2 + s1 >= y1 and h2 - maxdown * s1 <= y1:
            rec(h2, s1)
        for l in downs:
            h2 = h - l
            if h2 < 0:
                break
            if h2 + s1 >= y1 and h2 - maxdown * s1 <= y1:
                labels.append(h2 * base + l)
                rec(h2, s1)
                labels.pop()

    rec(y0, nsteps)
    return out


def bareiss_det(matrix):
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        row_k = a[k]
        akk = row_k[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def minors_of_order(matrix, m, d):
    """All ``d x d`` minors of the leading ``m x m`` block of an integer matrix.

    Returns a list of ``(rows, cols, det)`` in lexicographic order.
    """
    out = []
    idx = range(m)
    for rows in combinations(idx, d):
        sub_rows = [matrix[i] for i in rows]
        for cols in combinations(idx, d):
            sub = [[row[c] for c in cols] for row in sub_rows]
            out.append((rows, cols, bareiss_det(sub)))
    return out
