# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer elimination kernels.

Same algorithms and pivot rules as ``_pure``; entries restricted to 64 bits
with 128-bit intermediates.  Raises OverflowError as soon as a value leaves
the representable range so the caller can redo the computation with
unbounded Python ints.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    ctypedef long long i128 "__int128_t"

cdef long long I64_MAX = (<long long> 1 << 62) - 1 + (<long long> 1 << 62)  # 2**63 - 1
cdef long long I64_MIN = -I64_MAX - 1


cdef inline long long _checked(i128 v) except? -9223372036854775807:
    if v > <i128> I64_MAX or v < <i128> I64_MIN:
        raise OverflowError("entry exceeds 64 bits")
    return <long long> v


cdef long long* _to_c(object mat, Py_ssize_t nrows, Py_ssize_t ncols) except NULL:
    cdef long long* buf = <long long*> malloc(nrows * ncols * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef object row
    try:
        for i in range(nrows):
            row = mat[i]
            for j in range(ncols):
                buf[i * ncols + j] = row[j]  # raises OverflowError on big ints
    except BaseException:
        free(buf)
        raise
    return buf


def echelon(mat):
    """Bareiss row echelon of an integer matrix; see ``_pure.echelon``."""
    cdef Py_ssize_t nrows = len(mat)
    cdef Py_ssize_t ncols = len(mat[0]) if nrows else 0
    cdef long long* m = _to_c(mat, nrows, ncols)
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef long long prev = 1, piv, f, tmp
    cdef i128 acc
    try:
        for c in range(ncols):
            if r == nrows:
                break
            pr = -1
            for i in range(r, nrows):
                if m[i * ncols + c] != 0:
                    pr = i
                    break
            if pr < 0:
                continue
            if pr != r:
                for j in range(ncols):
                    tmp = m[r * ncols + j]
                    m[r * ncols + j] = m[pr * ncols + j]
                    m[pr * ncols + j] = tmp
            piv = m[r * ncols + c]
            for i in range(r + 1, nrows):
                f = m[i * ncols + c]
                if f != 0:
                    for j in range(c, ncols):
                        acc = <i128> piv * <i128> m[i * ncols + j] \
                            - <i128> f * <i128> m[r * ncols + j]
                        m[i * ncols + j] = _checked(acc / <i128> prev)
                elif prev != 1 or piv != 1:
                    for j in range(c, ncols):
                        acc = <i128> piv * <i128> m[i * ncols + j]
                        m[i * ncols + j] = _checked(acc / <i128> prev)
            pivots.append(c)
            prev = piv
            r += 1
        out = [[m[i * ncols + j] for j in range(ncols)] for i in range(nrows)]
    finally:
        free(m)
    return out, pivots


def matmul(a, b):
    """Product of two integer matrices; see ``_pure.matmul``."""
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t k = len(b)
    cdef Py_ssize_t p = len(b[0]) if k else 0
    cdef long long* ca = _to_c(a, n, k)
    cdef long long* cb
    try:
        cb = _to_c(b, k, p)
    except BaseException:
        free(ca)
        raise
    cdef i128 acc, term
    cdef i128 ACC_LIM = (<i128> 1) << 126
    cdef Py_ssize_t i, j, t
    cdef list out = []
    cdef list row
    try:
        for i in range(n):
            row = []
            for j in range(p):
                acc = 0
                for t in range(k):
                    term = <i128> ca[i * k + t] * <i128> cb[t * p + j]
                    acc += term
                    if acc > ACC_LIM or acc < -ACC_LIM:
                        raise OverflowError("accumulator exceeds range")
                row.append(_checked(acc))
            out.append(row)
    finally:
        free(ca)
        free(cb)
    return out
