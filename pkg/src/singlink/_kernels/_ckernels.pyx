# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.  Same signatures and results as ``_pykernels``.

All arithmetic is int64; callers in ``singlink._kernels`` only dispatch here
when the inputs are small enough that no intermediate can overflow.
"""
from libc.stdint cimport int64_t

cdef enum:
    MAXR = 16


def lattice_counts(long long a, long long b, long long c):
    cdef int64_t L = a * b * c
    cdef int64_t bc = b * c, ac = a * c, ab = a * b
    cdef int64_t i, j, k, s, si, sij
    cdef int64_t pg = 0, plus = 0, minus = 0
    for i in range(1, a):
        si = i * bc
        for j in range(1, b):
            sij = si + j * ac
            for k in range(1, c):
                s = sij + k * ab
                if s < L:
                    pg += 1
                    plus += 1
                elif s > L and s < 2 * L:
                    minus += 1
                elif s > 2 * L:
                    plus += 1
    return pg, plus, minus


cdef bint _negdef(int64_t* a, int n) nogil:
    # a is an n*n row-major scratch buffer, destroyed in place
    cdef int64_t prev = 1, pivot
    cdef int i, j, k
    for k in range(n):
        pivot = a[k * n + k]
        if pivot == 0:
            return False
        if (pivot > 0) != (k % 2 == 1):
            return False
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i * n + j] = (a[i * n + j] * pivot - a[i * n + k] * a[k * n + j]) // prev
        prev = pivot
    return True


def negdef_minors(rows):
    cdef int n = len(rows)
    cdef int64_t buf[MAXR * MAXR]
    cdef int i, j
    if n > MAXR:
        raise ValueError("matrix too large for compiled kernel")
    for i in range(n):
        for j in range(n):
            buf[i * n + j] = rows[i][j]
    return bool(_negdef(buf, n))


def sweep_exhaustive(offdiag, long long n):
    cdef int r = len(offdiag)
    cdef int64_t base[MAXR * MAXR]
    cdef int64_t work[MAXR * MAXR]
    cdef int64_t weights[MAXR]
    cdef int64_t degrees[MAXR]
    cdef int i, j, idx
    cdef bint ok, dom
    cdef long long total = 0, negdef = 0, dom_total = 0, dom_negdef = 0
    if r > MAXR:
        raise ValueError("graph too large for compiled kernel")
    for i in range(r):
        degrees[i] = 0
        weights[i] = -1
        for j in range(r):
            base[i * r + j] = offdiag[i][j]
            degrees[i] += offdiag[i][j]
    with nogil:
        while True:
            for idx in range(r * r):
                work[idx] = base[idx]
            dom = True
            for i in range(r):
                work[i * r + i] = weights[i]
                if weights[i] > -(degrees[i] + 1):
                    dom = False
            ok = _negdef(work, r)
            total += 1
            if ok:
                negdef += 1
            if dom:
                dom_total += 1
                if ok:
                    dom_negdef += 1
            i = r - 1
            while i >= 0:
                if weights[i] > -n:
                    weights[i] -= 1
                    break
                weights[i] = -1
                i -= 1
            if i < 0:
                break
    return total, negdef, dom_total, dom_negdef


def genus_box(adj, long long det, weights, long long gmax):
    cdef int r = len(weights)
    cdef int64_t A[MAXR * MAXR]
    cdef int64_t w[MAXR]
    cdef int64_t g[MAXR]
    cdef int64_t b[MAXR]
    cdef int64_t s
    cdef int i, j
    cdef bint good
    if r > MAXR:
        raise ValueError("graph too large for compiled kernel")
    for i in range(r):
        w[i] = weights[i]
        g[i] = 0
        for j in range(r):
            A[i * r + j] = adj[i][j]
    out = []
    while True:
        for i in range(r):
            b[i] = -w[i] - 2 + 2 * g[i]
        good = True
        for i in range(r):
            s = 0
            for j in range(r):
                s += A[i * r + j] * b[j]
            if s % det != 0:
                good = False
                break
        if good:
            out.append(tuple([g[i] for i in range(r)]))
        i = r - 1
        while i >= 0:
            if g[i] < gmax:
                g[i] += 1
                break
            g[i] = 0
            i -= 1
        if i < 0:
            break
    return out
