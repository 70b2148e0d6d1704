# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled backend for the exhaustive 4-linear residual sweep.

Same contract as ``malcevkit._sweep_py.mal_witness`` but on a flat int64
table; the dispatcher in ``malcevkit.kernels`` guarantees the entries are
small enough that no intermediate can overflow 64-bit arithmetic, and falls
back to the pure backend otherwise.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset


def mal_witness(object flat, int n):
    """flat: array('q') of length n^3 with gamma[i][j][k] at (i*n+j)*n+k."""
    cdef long long[::1] g = flat
    if n == 0:
        return None
    cdef Py_ssize_t n2 = <Py_ssize_t> n * n
    cdef Py_ssize_t n3 = n2 * n
    cdef Py_ssize_t n4 = n3 * n
    cdef long long *triple = <long long *> malloc(sizeof(long long) * n4)
    cdef long long *buf = <long long *> malloc(sizeof(long long) * n)
    if triple == NULL or buf == NULL:
        if triple != NULL:
            free(triple)
        if buf != NULL:
            free(buf)
        raise MemoryError()

    cdef int a, b, c, d, k, l, m
    cdef long long coeff, w
    cdef Py_ssize_t base, row
    cdef bint hit
    try:
        # triple[((i n + j) n + k) n + m] = coefficient of e_m in ((e_i e_j) e_k)
        memset(triple, 0, sizeof(long long) * n4)
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    base = (((<Py_ssize_t> a) * n + b) * n + c) * n
                    for k in range(n):
                        coeff = g[((<Py_ssize_t> a) * n + b) * n + k]
                        if coeff != 0:
                            row = ((<Py_ssize_t> k) * n + c) * n
                            for m in range(n):
                                triple[base + m] += coeff * g[row + m]

        for a in range(n):
            for b in range(n):
                for c in range(n):
                    for d in range(n):
                        memset(buf, 0, sizeof(long long) * n)
                        # ((ab)c)d
                        base = (((<Py_ssize_t> a) * n + b) * n + c) * n
                        for m in range(n):
                            coeff = triple[base + m]
                            if coeff != 0:
                                row = ((<Py_ssize_t> m) * n + d) * n
                                for l in range(n):
                                    buf[l] += coeff * g[row + l]
                        # ((bc)d)a
                        base = (((<Py_ssize_t> b) * n + c) * n + d) * n
                        for m in range(n):
                            coeff = triple[base + m]
                            if coeff != 0:
                                row = ((<Py_ssize_t> m) * n + a) * n
                                for l in range(n):
                                    buf[l] += coeff * g[row + l]
                        # ((cd)a)b
                        base = (((<Py_ssize_t> c) * n + d) * n + a) * n
                        for m in range(n):
                            coeff = triple[base + m]
                            if coeff != 0:
                                row = ((<Py_ssize_t> m) * n + b) * n
                                for l in range(n):
                                    buf[l] += coeff * g[row + l]
                        # ((da)b)c
                        base = (((<Py_ssize_t> d) * n + a) * n + b) * n
                        for m in range(n):
                            coeff = triple[base + m]
                            if coeff != 0:
                                row = ((<Py_ssize_t> m) * n + c) * n
                                for l in range(n):
                                    buf[l] += coeff * g[row + l]
                        # -(ac)(bd)
                        for m in range(n):
                            coeff = g[((<Py_ssize_t> a) * n + c) * n + m]
                            if coeff != 0:
                                for l in range(n):
                                    w = g[((<Py_ssize_t> b) * n + d) * n + l]
                                    if w != 0:
                                        w = coeff * w
                                        row = ((<Py_ssize_t> m) * n + l) * n
                                        for k in range(n):
                                            buf[k] -= w * g[row + k]
                        hit = False
                        for m in range(n):
                            if buf[m] != 0:
                                hit = True
                                break
                        if hit:
                            return (a, b, c, d, tuple(buf[m] for m in range(n)))
        return None
    finally:
        free(triple)
        free(buf)
