# cython: language_level=3
"""Compiled twins of ``_pykernels``; same signatures, same results."""
from libc.stdlib cimport malloc, free


cdef long long _lr_rec(int t, int ncells, int *cr, int *cc, int *outer,
                       int *inner, int *grid, int ncols, int *content, int k,
                       int *counts) nogil:
    cdef int r, c, v, lo, hi
    cdef long long total = 0
    if t == ncells:
        return 1
    r = cr[t]
    c = cc[t]
    hi = k
    if c + 1 < outer[r] and grid[r * ncols + c + 1] < hi:
        hi = grid[r * ncols + c + 1]
    lo = 1
    if r > 0 and c >= inner[r - 1]:
        lo = grid[(r - 1) * ncols + c] + 1
    if r + 1 < hi:
        hi = r + 1
    v = lo
    while v <= hi:
        if counts[v] < content[v - 1] and (v == 1 or counts[v] < counts[v - 1]):
            counts[v] += 1
            grid[r * ncols + c] = v
            total += _lr_rec(t + 1, ncells, cr, cc, outer, inner, grid, ncols,
                             content, k, counts)
            counts[v] -= 1
        v += 1
    grid[r * ncols + c] = 0
    return total


def lr_count(outer, inner, content):
    cdef tuple o = tuple(outer)
    cdef tuple i_ = tuple(inner)
    cdef tuple w = tuple(content)
    cdef int rows = len(o)
    cdef int k = len(w)
    cdef int r, c, t, ncols, ncells
    if len(i_) > rows or sum(o) != sum(i_) + sum(w):
        return 0
    i_ = i_ + (0,) * (rows - len(i_))
    for r in range(rows):
        if i_[r] > o[r]:
            return 0
    if k == 0:
        return 1
    ncols = o[0]
    ncells = sum(o) - sum(i_)
    cdef int *outer_a = <int *> malloc(rows * sizeof(int))
    cdef int *inner_a = <int *> malloc(rows * sizeof(int))
    cdef int *grid = <int *> malloc(rows * ncols * sizeof(int))
    cdef int *content_a = <int *> malloc(k * sizeof(int))
    cdef int *counts = <int *> malloc((k + 1) * sizeof(int))
    cdef int *cr = <int *> malloc((ncells + 1) * sizeof(int))
    cdef int *cc = <int *> malloc((ncells + 1) * sizeof(int))
    cdef long long result
    try:
        for r in range(rows):
            outer_a[r] = o[r]
            inner_a[r] = i_[r]
        for r in range(rows * ncols):
            grid[r] = 0
        for r in range(k):
            content_a[r] = w[r]
        for r in range(k + 1):
            counts[r] = 0
        t = 0
        for r in range(rows):
            c = outer_a[r] - 1
            while c >= inner_a[r]:
                cr[t] = r
                cc[t] = c
                t += 1
                c -= 1
        with nogil:
            result = _lr_rec(0, ncells, cr, cc, outer_a, inner_a, grid, ncols,
                             content_a, k, counts)
    finally:
        free(outer_a)
        free(inner_a)
        free(grid)
        free(content_a)
        free(counts)
        free(cr)
        free(cc)
    return result


cdef list _strips(tuple lam, object size, object max_len):
    cdef int n = len(lam)
    cdef list out = []
    cdef list prefix = [0] * n
    cdef long target = -1 if size is None else sum(lam) - size
    cdef long ml = -1 if max_len is None else max_len
    _strip_rec(lam, n, 0, prefix, 0, target, ml, out)
    return out


cdef void _strip_rec(tuple lam, int n, int i, list prefix, long total,
                     long target, long ml, list out):
    cdef int v, lo, m
    if i == n:
        if target < 0 or total == target:
            m = n
            while m > 0 and prefix[m - 1] == 0:
                m -= 1
            if ml < 0 or m <= ml:
                out.append(tuple(prefix[:m]))
        return
    lo = lam[i + 1] if i + 1 < n else 0
    v = lam[i]
    while v >= lo:
        prefix[i] = v
        _strip_rec(lam, n, i + 1, prefix, total + v, target, ml, out)
        v -= 1


def kostka(shape, content):
    cdef tuple sh = tuple(p for p in shape if p)
    cdef tuple w = tuple(content)
    if sum(sh) != sum(w):
        return 0
    cdef dict memo = {}
    return _kostka_rec(sh, len(w), w, memo)


cdef object _kostka_rec(tuple lam, int k, tuple w, dict memo):
    if k == 0:
        return 1 if not lam else 0
    if len(lam) > k:
        return 0
    key = (lam, k)
    got = memo.get(key)
    if got is not None:
        return got
    total = 0
    for nu in _strips(lam, w[k - 1], None):
        total += _kostka_rec(nu, k - 1, w, memo)
    memo[key] = total
    return total


def ssyt_count(shape, n):
    cdef tuple sh = tuple(p for p in shape if p)
    cdef dict memo = {}
    return _ssyt_rec(sh, n, memo)


cdef object _ssyt_rec(tuple lam, int m, dict memo):
    if not lam:
        return 1
    if len(lam) > m:
        return 0
    key = (lam, m)
    got = memo.get(key)
    if got is not None:
        return got
    total = 0
    for nu in _strips(lam, None, m - 1):
        total += _ssyt_rec(nu, m - 1, memo)
    memo[key] = total
    return total


def mono_mul(tuple a, tuple b, tuple oddmask):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t p
    cdef long x, y
    cdef int inversions = 0
    cdef int seen_b = 0
    cdef list out = [None] * n
    for p in range(n):
        x = a[p]
        y = b[p]
        if oddmask[p]:
            if x and y:
                return 0, None
            if x:
                inversions += seen_b
            elif y:
                seen_b += 1
        out[p] = x + y
    return (-1 if inversions & 1 else 1), tuple(out)
