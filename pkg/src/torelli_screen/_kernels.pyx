# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_kernels_py``.

Same two kernels, same results, C integer arithmetic.  Callers
(:mod:`torelli_screen.backend`) only route here when the int64 guards
hold (degree and branch count within the documented bounds), so no
overflow checks are needed in the loops: i*u_k < 10^12 and every
accumulator stays below r*n <= 10^13.
"""

from libc.stdlib cimport free, malloc, qsort


cdef long long c_gcd(long long a, long long b):
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef long long *copy_multiplicities(object u, Py_ssize_t r) except NULL:
    cdef long long *buf = <long long *> malloc(r * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t k
    for k in range(r):
        buf[k] = u[k]
    return buf


def character_sums(long long n, u):
    """See ``_kernels_py.character_sums``."""
    cdef Py_ssize_t r = len(u)
    cdef list d = [0] * n
    cdef list c = [0] * n
    if r == 0 or n <= 1:
        return d, c
    cdef long long *uu = copy_multiplicities(u, r)
    cdef long long i, t, dsum, csum
    cdef Py_ssize_t k
    try:
        for i in range(1, n):
            dsum = 0
            csum = 0
            for k in range(r):
                t = (i * uu[k]) % n
                if t:
                    dsum += t
                    csum += 1
            d[i] = dsum
            c[i] = csum
    finally:
        free(uu)
    return d, c


cdef int cmp_longlong(const void *a, const void *b) noexcept nogil:
    cdef long long x = (<const long long *> a)[0]
    cdef long long y = (<const long long *> b)[0]
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


def canonical_u(long long n, u):
    """See ``_kernels_py.canonical_u``."""
    cdef Py_ssize_t r = len(u)
    if r == 0:
        return ()
    cdef long long *uu = copy_multiplicities(u, r)
    cdef long long *best = <long long *> malloc(r * sizeof(long long))
    cdef long long *cand = <long long *> malloc(r * sizeof(long long))
    if best == NULL or cand == NULL:
        free(uu)
        free(best)
        free(cand)
        raise MemoryError()
    cdef long long m
    cdef Py_ssize_t k
    cdef int have_best = 0, verdict
    try:
        for m in range(1, n):
            if c_gcd(m, n) != 1:
                continue
            for k in range(r):
                cand[k] = (m * uu[k]) % n
            qsort(cand, r, sizeof(long long), cmp_longlong)
            if not have_best:
                for k in range(r):
                    best[k] = cand[k]
                have_best = 1
                continue
            verdict = 0
            for k in range(r):
                if cand[k] < best[k]:
                    verdict = -1
                    break
                if cand[k] > best[k]:
                    verdict = 1
                    break
            if verdict < 0:
                for k in range(r):
                    best[k] = cand[k]
        return tuple(best[k] for k in range(r))
    finally:
        free(uu)
        free(best)
        free(cand)
