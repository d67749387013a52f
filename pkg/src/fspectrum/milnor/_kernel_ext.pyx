# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse echelon kernel.

Same algorithm as ``_kernel_py.echelon_pivots`` on 64-bit integers.  Every
multiply and subtract is overflow-checked; on overflow the whole computation
is abandoned with ``OverflowError`` and the caller reruns it on the
arbitrary-precision path, so results are always exact.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy
from libc.stdint cimport int64_t, int32_t

cdef extern from *:
    """
    #include <stdint.h>
    static inline int fs_mul_ovf(int64_t a, int64_t b, int64_t *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int fs_sub_ovf(int64_t a, int64_t b, int64_t *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int fs_mul_ovf(int64_t a, int64_t b, int64_t *r) nogil
    int fs_sub_ovf(int64_t a, int64_t b, int64_t *r) nogil


cdef inline int64_t _gcd(int64_t a, int64_t b) noexcept nogil:
    cdef int64_t t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int64_t _content(int64_t *vals, Py_ssize_t n) noexcept nogil:
    cdef int64_t g = 0
    cdef Py_ssize_t i
    for i in range(n):
        g = _gcd(g, vals[i])
        if g == 1:
            return 1
    return g


cdef int _reduce_all(const int64_t[:] row_ptr, const int32_t[:] cols_in,
                     const int64_t[:] vals_in, Py_ssize_t nrows, Py_ssize_t ncols,
                     int32_t **piv_cols, int64_t **piv_vals, Py_ssize_t *piv_len) noexcept nogil:
    """Returns 0 on success, 1 on overflow, 2 on allocation failure."""
    cdef int32_t *ac = <int32_t *> malloc(ncols * sizeof(int32_t))
    cdef int64_t *av = <int64_t *> malloc(ncols * sizeof(int64_t))
    cdef int32_t *bc = <int32_t *> malloc(ncols * sizeof(int32_t))
    cdef int64_t *bv = <int64_t *> malloc(ncols * sizeof(int64_t))
    cdef int32_t *tc
    cdef int64_t *tv
    cdef Py_ssize_t r, i, j, k, alen, plen, start, stop
    cdef int32_t lead
    cdef int64_t a, b, g, x, y, z
    cdef int status = 0
    cdef int32_t *pc
    cdef int64_t *pv
    if ac == NULL or av == NULL or bc == NULL or bv == NULL:
        status = 2
    r = 0
    while status == 0 and r < nrows:
        start = row_ptr[r]
        stop = row_ptr[r + 1]
        alen = 0
        for i in range(start, stop):
            if vals_in[i] != 0:
                ac[alen] = cols_in[i]
                av[alen] = vals_in[i]
                alen += 1
        while alen > 0:
            lead = ac[0]
            if piv_cols[lead] == NULL:
                g = _content(av, alen)
                if av[0] < 0:
                    g = -g
                pc = <int32_t *> malloc(alen * sizeof(int32_t))
                pv = <int64_t *> malloc(alen * sizeof(int64_t))
                if pc == NULL or pv == NULL:
                    free(pc)
                    free(pv)
                    status = 2
                    break
                for i in range(alen):
                    pc[i] = ac[i]
                    pv[i] = av[i] // g
                piv_cols[lead] = pc
                piv_vals[lead] = pv
                piv_len[lead] = alen
                break
            pc = piv_cols[lead]
            pv = piv_vals[lead]
            plen = piv_len[lead]
            a = pv[0]
            b = av[0]
            g = _gcd(a, b)
            a = a // g
            b = b // g
            # merge a*row - b*pivot, both sorted by column; leads cancel
            i = 1
            j = 1
            k = 0
            while i < alen or j < plen:
                if j >= plen or (i < alen and ac[i] < pc[j]):
                    if fs_mul_ovf(a, av[i], &z):
                        status = 1
                        break
                    bc[k] = ac[i]
                    bv[k] = z
                    k += 1
                    i += 1
                elif i >= alen or pc[j] < ac[i]:
                    if fs_mul_ovf(b, pv[j], &y):
                        status = 1
                        break
                    if fs_sub_ovf(0, y, &z):
                        status = 1
                        break
                    bc[k] = pc[j]
                    bv[k] = z
                    k += 1
                    j += 1
                else:
                    if fs_mul_ovf(a, av[i], &x) or fs_mul_ovf(b, pv[j], &y) or fs_sub_ovf(x, y, &z):
                        status = 1
                        break
                    if z != 0:
                        bc[k] = ac[i]
                        bv[k] = z
                        k += 1
                    i += 1
                    j += 1
            if status:
                break
            if k > 0:
                g = _content(bv, k)
                if g > 1:
                    for i in range(k):
                        bv[i] = bv[i] // g
            tc = ac
            ac = bc
            bc = tc
            tv = av
            av = bv
            bv = tv
            alen = k
        r += 1
    free(ac)
    free(av)
    free(bc)
    free(bv)
    return status


def echelon_pivots(const int64_t[:] row_ptr, const int32_t[:] cols, const int64_t[:] vals,
                   Py_ssize_t ncols):
    """Pivot columns for rows in compressed form (``row_ptr`` has nrows + 1 entries)."""
    cdef Py_ssize_t nrows = row_ptr.shape[0] - 1
    cdef int32_t **piv_cols = <int32_t **> malloc(max(ncols, 1) * sizeof(int32_t *))
    cdef int64_t **piv_vals = <int64_t **> malloc(max(ncols, 1) * sizeof(int64_t *))
    cdef Py_ssize_t *piv_len = <Py_ssize_t *> malloc(max(ncols, 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t c
    cdef int status
    if piv_cols == NULL or piv_vals == NULL or piv_len == NULL:
        free(piv_cols)
        free(piv_vals)
        free(piv_len)
        raise MemoryError()
    for c in range(ncols):
        piv_cols[c] = NULL
        piv_vals[c] = NULL
        piv_len[c] = 0
    with nogil:
        status = _reduce_all(row_ptr, cols, vals, nrows, ncols, piv_cols, piv_vals, piv_len)
    result = [c for c in range(ncols) if piv_cols[c] != NULL]
    for c in range(ncols):
        free(piv_cols[c])
        free(piv_vals[c])
    free(piv_cols)
    free(piv_vals)
    free(piv_len)
    if status == 1:
        raise OverflowError("64-bit coefficient overflow in echelon kernel")
    if status == 2:
        raise MemoryError()
    return result
