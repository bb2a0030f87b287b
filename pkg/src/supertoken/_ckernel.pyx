# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled token-move kernel.

Configurations are keyed by their base-``n`` digit value; since every row has
``k`` digits, numeric order of keys equals lexicographic order of the rows,
so the index of a configuration is a binary search in the key array.
Callers must ensure ``n**k`` fits in a signed 64-bit integer.
"""
import numpy as np
cimport numpy as cnp
from libcpp.vector cimport vector

ctypedef long long i64

cnp.import_array()


cdef i64 _walk(int n, int k, int s, bint dist, i64[:, ::1] out, bint fill) noexcept:
    # Lexicographic backtracking over capacity-respecting rows.
    cdef int[64] a
    cdef int[64] cand
    cdef vector[int] counts
    counts.resize(n, 0)
    cdef int p = 0, v, q
    cdef i64 total = 0
    cand[0] = 0
    while p >= 0:
        if p == k:
            if fill:
                for q in range(k):
                    out[total, q] = a[q]
            total += 1
            p -= 1
            counts[a[p]] -= 1
            cand[p] = a[p] + 1
            continue
        v = cand[p]
        while v < n and counts[v] >= s:
            v += 1
        if v >= n:
            p -= 1
            if p >= 0:
                counts[a[p]] -= 1
                cand[p] = a[p] + 1
            continue
        a[p] = v
        counts[v] += 1
        p += 1
        if p < k:
            cand[p] = 0 if dist else a[p - 1]
    return total


def enumerate_configs(int n, int k, int s, bint distinguishable):
    """Return an ``(order, k)`` int64 array of configurations in lexicographic order."""
    if k > 64:
        raise ValueError("compiled kernel supports at most 64 tokens")
    if n <= 0:
        return np.zeros((0, k), dtype=np.int64)
    cdef i64[:, ::1] dummy = np.zeros((1, k), dtype=np.int64)
    cdef i64 order = _walk(n, k, s, distinguishable, dummy, False)
    out = np.empty((order, k), dtype=np.int64)
    cdef i64[:, ::1] view = out
    if order:
        _walk(n, k, s, distinguishable, view, True)
    return out


cdef inline i64 _find(const i64[::1] keys, i64 key) noexcept nogil:
    cdef i64 lo = 0, hi = keys.shape[0] - 1, mid
    while lo <= hi:
        mid = (lo + hi) >> 1
        if keys[mid] < key:
            lo = mid + 1
        elif keys[mid] > key:
            hi = mid - 1
        else:
            return mid
    return -1


def build_adjacency(const i64[:, ::1] rows, const i64[::1] base_indptr,
                    const i64[::1] base_indices, int n, int s, bint distinguishable):
    """CSR adjacency (indptr, indices) of the supertoken graph on ``rows``."""
    cdef i64 order = rows.shape[0]
    cdef int k = rows.shape[1]
    if k > 64:
        raise ValueError("compiled kernel supports at most 64 tokens")
    if float(n) ** k >= 2.0 ** 62:
        raise OverflowError("configuration keys do not fit in 64 bits")
    cdef i64[64] pw
    cdef int q, r, t, u, w, cnt
    cdef i64 i, e, key, nkey, j
    pw[k - 1] = 1
    for q in range(k - 2, -1, -1):
        pw[q] = pw[q + 1] * n
    keys_arr = np.empty(order, dtype=np.int64)
    cdef i64[::1] keys = keys_arr
    for i in range(order):
        key = 0
        for q in range(k):
            key += rows[i, q] * pw[q]
        keys[i] = key

    indptr_arr = np.empty(order + 1, dtype=np.int64)
    cdef i64[::1] indptr = indptr_arr
    cdef vector[i64] indices
    cdef vector[i64] row
    cdef int[64] tmp
    cdef i64 missing = 0
    indptr[0] = 0
    with nogil:
        for i in range(order):
            row.clear()
            for q in range(k):
                u = <int>rows[i, q]
                if not distinguishable and q > 0 and rows[i, q - 1] == u:
                    continue
                for e in range(base_indptr[u], base_indptr[u + 1]):
                    w = <int>base_indices[e]
                    cnt = 0
                    for r in range(k):
                        if r != q and rows[i, r] == w:
                            cnt += 1
                    if cnt >= s:
                        continue
                    if distinguishable:
                        nkey = keys[i] + (w - u) * pw[q]
                    else:
                        # drop position q, insert w keeping the row sorted
                        t = 0
                        for r in range(k):
                            if r != q:
                                tmp[t] = <int>rows[i, r]
                                t += 1
                        r = k - 1
                        while r > 0 and tmp[r - 1] > w:
                            tmp[r] = tmp[r - 1]
                            r -= 1
                        tmp[r] = w
                        nkey = 0
                        for r in range(k):
                            nkey += tmp[r] * pw[r]
                    j = _find(keys, nkey)
                    if j >= 0:
                        row.push_back(j)
                    else:
                        missing += 1
            # insertion sort; rows are short (at most k * max degree)
            for r in range(1, <int>row.size()):
                nkey = row[r]
                t = r - 1
                while t >= 0 and row[t] > nkey:
                    row[t + 1] = row[t]
                    t -= 1
                row[t + 1] = nkey
            for r in range(<int>row.size()):
                if r == 0 or row[r] != row[r - 1]:
                    indices.push_back(row[r])
            indptr[i + 1] = indices.size()
    if missing:
        raise ValueError(f"{missing} moves led outside the configuration list")
    out = np.empty(indices.size(), dtype=np.int64)
    cdef i64[::1] outv = out
    for i in range(<i64>indices.size()):
        outv[i] = indices[i]
    return indptr_arr, out
