# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels; same contracts as ``_pykernels``.

All arithmetic is on int64 with explicit overflow checks.  Any overflow
raises ``OverflowError`` so the caller can rerun on Python integers.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    """
    static int k_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static int k_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static int k_popcount(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    """
    int k_mul(long long a, long long b, long long *r) nogil
    int k_add(long long a, long long b, long long *r) nogil
    int k_popcount(unsigned long long x) nogil


cdef inline long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef long long *_load_rows(rows, Py_ssize_t width) except NULL:
    cdef Py_ssize_t nrows = len(rows)
    cdef long long *buf = <long long *> malloc((nrows * width + 1) * sizeof(long long))
    cdef Py_ssize_t i, j
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(width):
                buf[i * width + j] = row[j]
    except OverflowError:
        free(buf)
        raise
    return buf


def subset_sum(values, int n, int sign):
    cdef Py_ssize_t size = 1 << n
    cdef long long *a = <long long *> malloc(size * sizeof(long long))
    cdef Py_ssize_t s, i
    cdef long long bit, term, res
    cdef int overflow = 0
    if a == NULL:
        raise MemoryError()
    try:
        for s in range(size):
            a[s] = values[s]
        with nogil:
            for i in range(n):
                bit = 1 << i
                for s in range(size):
                    if s & bit:
                        if k_mul(sign, a[s ^ bit], &term) or k_add(a[s], term, &res):
                            overflow = 1
                            break
                        a[s] = res
                if overflow:
                    break
        if overflow:
            raise OverflowError("subset_sum left int64")
        return [a[s] for s in range(size)]
    finally:
        free(a)


def combine_pairs(pos, neg, Py_ssize_t col):
    if not pos or not neg:
        return []
    cdef Py_ssize_t width = len(pos[0])
    cdef Py_ssize_t npos = len(pos), nneg = len(neg)
    cdef long long *P = NULL
    cdef long long *Q = NULL
    cdef long long *row = NULL
    cdef Py_ssize_t i, j, t
    cdef long long cp, cq, x, y, z, g
    out = []
    try:
        P = _load_rows(pos, width)
        Q = _load_rows(neg, width)
        row = <long long *> malloc(width * sizeof(long long))
        if row == NULL:
            raise MemoryError()
        for i in range(npos):
            cp = P[i * width + col]
            for j in range(nneg):
                cq = -Q[j * width + col]
                g = 0
                for t in range(width):
                    if (k_mul(cq, P[i * width + t], &x)
                            or k_mul(cp, Q[j * width + t], &y)
                            or k_add(x, y, &z)):
                        raise OverflowError("combine_pairs left int64")
                    row[t] = z
                    g = _gcd(g, z)
                if g > 1:
                    for t in range(width):
                        row[t] = row[t] // g
                out.append(tuple([row[t] for t in range(width)]))
        return out
    finally:
        free(P)
        free(Q)
        free(row)


def adjacent_pairs(zero_sets, plus, minus, int min_common):
    cdef Py_ssize_t nrays = len(zero_sets)
    if nrays == 0 or not plus or not minus:
        return []
    cdef int top = 0
    for z in zero_sets:
        top = max(top, (<object> z).bit_length())
    cdef Py_ssize_t words = top // 64 + 1
    cdef uint64_t *Z = <uint64_t *> malloc(nrays * words * sizeof(uint64_t))
    cdef uint64_t *common = <uint64_t *> malloc(words * sizeof(uint64_t))
    cdef Py_ssize_t r, w, ii, jj, i, j
    cdef int count, covered
    mask = (1 << 64) - 1
    pairs = []
    if Z == NULL or common == NULL:
        free(Z)
        free(common)
        raise MemoryError()
    try:
        for r in range(nrays):
            z = zero_sets[r]
            for w in range(words):
                Z[r * words + w] = (z >> (64 * w)) & mask
        for ii in range(len(plus)):
            i = plus[ii]
            for jj in range(len(minus)):
                j = minus[jj]
                count = 0
                for w in range(words):
                    common[w] = Z[i * words + w] & Z[j * words + w]
                    count += k_popcount(common[w])
                if count < min_common:
                    continue
                covered = 0
                for r in range(nrays):
                    if r == i or r == j:
                        continue
                    covered = 1
                    for w in range(words):
                        if Z[r * words + w] & common[w] != common[w]:
                            covered = 0
                            break
                    if covered:
                        break
                if not covered:
                    pairs.append((i, j))
        return pairs
    finally:
        free(Z)
        free(common)
