# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops; see ``_pykernels`` for the contracts."""

from itertools import combinations

from libc.stdlib cimport free, malloc


cdef struct Walk:
    int y1
    int maxdown
    int base
    int ndowns
    int *downs
    int *labels
    int *scratch
    int nlabels


cdef inline void _insertion_sort(int *a, int n) noexcept:
    cdef int i, j, v
    for i in range(1, n):
        v = a[i]
        j = i - 1
        while j >= 0 and a[j] > v:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = v


cdef int _walk(Walk *w, int h, int s, dict out) except -1:
    cdef int i, l, h2, s1
    cdef tuple key
    if s == 0:
        if h == w.y1:
            for i in range(w.nlabels):
                w.scratch[i] = w.labels[i]
            _insertion_sort(w.scratch, w.nlabels)
            key = tuple([w.scratch[i] for i in range(w.nlabels)])
            out[key] = out.get(key, 0) + 1
        return 0
    s1 = s - 1
    h2 = h + 1
    if h2 + s1 >= w.y1 and h2 - w.maxdown * s1 <= w.y1:
        _walk(w, h2, s1, out)
    for i in range(w.ndowns):
        l = w.downs[i]
        h2 = h - l
        if h2 < 0:
            break
        if h2 + s1 >= w.y1 and h2 - w.maxdown * s1 <= w.y1:
            w.labels[w.nlabels] = h2 * w.base + l
            w.nlabels += 1
            _walk(w, h2, s1, out)
            w.nlabels -= 1
    return 0


def enumerate_paths(int r, int y0, int nsteps, int y1, downs):
    cdef dict out = {}
    cdef Walk w
    cdef list ds
    cdef int i
    if nsteps < 0 or y0 < 0 or y1 < 0:
        return out
    ds = sorted(set(downs))
    w.y1 = y1
    w.base = r + 1
    w.ndowns = len(ds)
    w.maxdown = ds[w.ndowns - 1] if w.ndowns else 0
    w.nlabels = 0
    w.downs = <int *> malloc((w.ndowns + 1) * sizeof(int))
    w.labels = <int *> malloc((nsteps + 1) * sizeof(int))
    w.scratch = <int *> malloc((nsteps + 1) * sizeof(int))
    if w.downs == NULL or w.labels == NULL or w.scratch == NULL:
        free(w.downs)
        free(w.labels)
        free(w.scratch)
        raise MemoryError()
    try:
        for i in range(w.ndowns):
            w.downs[i] = ds[i]
        _walk(&w, y0, nsteps, out)
    finally:
        free(w.downs)
        free(w.labels)
        free(w.scratch)
    return out


def bareiss_det(matrix):
    cdef list a = [list(row) for row in matrix]
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j, k
    cdef list row_i, row_k
    cdef object akk, aik, prev
    cdef int sign = 1
    if n == 0:
        return 1
    prev = 1
    for k in range(n - 1):
        row_k = a[k]
        if row_k[k] == 0:
            for i in range(k + 1, n):
                if (<list> a[i])[k] != 0:
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
            if aik == 0:
                if akk != prev:
                    for j in range(k + 1, n):
                        row_i[j] = (row_i[j] * akk) // prev
                continue
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * (<list> a[n - 1])[n - 1]


def minors_of_order(matrix, int m, int d):
    cdef list out = []
    cdef list sub_rows, sub
    cdef tuple rows, cols
    cdef list mat = [list(row) for row in matrix]
    for rows in combinations(range(m), d):
        sub_rows = [mat[i] for i in rows]
        for cols in combinations(range(m), d):
            sub = [[row[c] for c in cols] for row in sub_rows]
            out.append((rows, cols, bareiss_det(sub)))
    return out
