# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel: alternation count of the above/below classification
around ordered vertex links (contract shared with ``_plfallback``)."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def link_sign_changes(cnp.float64_t[::1] values,
                      cnp.int64_t[::1] keys,
                      cnp.int64_t[::1] centers,
                      cnp.int64_t[::1] flat,
                      cnp.int64_t[::1] offsets,
                      cnp.int64_t[::1] next_idx,
                      double tol):
    cdef Py_ssize_t n = centers.shape[0]
    out_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] out = out_arr
    cdef Py_ssize_t i, j, lo, hi
    cdef cnp.int64_t v, w, kv, count
    cdef double uv, d
    cdef bint first, prev, cur
    for i in range(n):
        v = centers[i]
        uv = values[v]
        kv = keys[v]
        lo = offsets[i]
        hi = offsets[i + 1]
        if hi - lo < 2:
            continue
        w = flat[lo]
        d = values[w] - uv
        first = d > tol or (d >= -tol and keys[w] > kv)
        prev = first
        count = 0
        for j in range(lo + 1, hi):
            w = flat[j]
            d = values[w] - uv
            cur = d > tol or (d >= -tol and keys[w] > kv)
            if cur != prev:
                count += 1
            prev = cur
        if prev != first:
            count += 1
        out[i] = count
    return out_arr
