# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Numerov sweep.  Mirrors ``_kernels_py.numerov_sweep`` exactly."""

from libc.math cimport fabs


def numerov_sweep(double[::1] g, double[::1] y, Py_ssize_t start, Py_ssize_t stop, double w_prev):
    cdef Py_ssize_t step = 1 if stop >= start else -1
    cdef Py_ssize_t i = start, j, nxt
    cdef double y_i = y[start]
    cdef double w = (1.0 - g[start]) * y_i
    cdef double d = w - w_prev
    cdef double big = 1e150, tiny = 1e-150
    cdef int nodes = 0
    cdef double last = y_i
    while i != stop:
        # summed form: carry d = w_i - w_(i-1) and w, never rebuild w from y
        d += 12.0 * g[i] * y_i
        w += d
        nxt = i + step
        y_i = w / (1.0 - g[nxt])
        y[nxt] = y_i
        if y_i != 0.0:
            if last != 0.0 and (y_i > 0.0) != (last > 0.0):
                nodes += 1
            last = y_i
        i = nxt
        if fabs(y_i) > big:
            j = start
            while True:
                y[j] *= tiny
                if j == i:
                    break
                j += step
            w *= tiny
            d *= tiny
            last *= tiny
            y_i = y[i]
    return nodes
