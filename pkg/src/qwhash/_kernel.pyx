# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled walk kernel. Mirrors ``_kernel_py`` operation for operation."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def evolve_planes(planes, bits, cos2, sin2, src_plus, src_minus):
    cdef double[:, ::1] cur = np.array(planes, dtype=np.float64, order="C", copy=True)
    cdef double[:, ::1] nxt = np.empty_like(cur)
    cdef double[:, ::1] tmp
    cdef const unsigned char[::1] b = np.ascontiguousarray(bits, dtype=np.uint8)
    cdef const double[::1] cs = np.ascontiguousarray(cos2, dtype=np.float64)
    cdef const double[::1] sn = np.ascontiguousarray(sin2, dtype=np.float64)
    cdef const cnp.intp_t[:, ::1] qp = np.ascontiguousarray(src_plus, dtype=np.intp)
    cdef const cnp.intp_t[:, ::1] qm = np.ascontiguousarray(src_minus, dtype=np.intp)
    cdef Py_ssize_t t, a, p, q, r
    cdef Py_ssize_t steps = b.shape[0]
    cdef Py_ssize_t d = qp.shape[0]
    cdef Py_ssize_t cells = cur.shape[1]
    cdef double c, s
    with nogil:
        for t in range(steps):
            c = cs[b[t]]
            s = sn[b[t]]
            for a in range(d):
                for p in range(cells):
                    q = qp[a, p]
                    r = qm[a, p]
                    nxt[0, p] = c * cur[0, q] + s * cur[2, q]
                    nxt[1, p] = c * cur[1, q] + s * cur[3, q]
                    nxt[2, p] = s * cur[0, r] - c * cur[2, r]
                    nxt[3, p] = s * cur[1, r] - c * cur[3, r]
                tmp = cur
                cur = nxt
                nxt = tmp
    return np.asarray(cur)


def probabilities(planes):
    cdef const double[:, ::1] pl = np.ascontiguousarray(planes, dtype=np.float64)
    cdef Py_ssize_t cells = pl.shape[1]
    out = np.empty(cells, dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t p
    with nogil:
        for p in range(cells):
            o[p] = (pl[0, p] * pl[0, p] + pl[1, p] * pl[1, p]) + (pl[2, p] * pl[2, p] + pl[3, p] * pl[3, p])
    return out
