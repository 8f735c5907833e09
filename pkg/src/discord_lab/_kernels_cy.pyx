# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled versions of the hot numeric kernels.

Mirrors _kernels_py operation for operation (including the canonical
component sort that makes permuted states bit-identical); see that module
for the documented reference semantics.
"""
import numpy as np

cimport numpy as cnp
from libc.math cimport log2, sqrt

cnp.import_array()

BACKEND_NAME = "cython"

cdef double _P_FLOOR = 1e-14


cdef inline double _xlog2(double x) noexcept nogil:
    if x > 0.0:
        return x * log2(x)
    return 0.0


def measured_entropy_grid(object a_in, object b_in, object t_in, object dirs_in):
    cdef double[::1] a = np.ascontiguousarray(a_in, dtype=np.float64)
    cdef double[::1] b = np.ascontiguousarray(b_in, dtype=np.float64)
    cdef double[:, ::1] t = np.ascontiguousarray(t_in, dtype=np.float64)
    cdef double[:, ::1] dirs = np.ascontiguousarray(dirs_in, dtype=np.float64)
    cdef Py_ssize_t n = dirs.shape[0]
    out_arr = np.zeros(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    cdef int k
    cdef double nx, ny, nz, an, tx, ty, tz, sgn, w, p, mx, my, mz, r, acc
    with nogil:
        for i in range(n):
            nx = dirs[i, 0]; ny = dirs[i, 1]; nz = dirs[i, 2]
            an = nx * a[0] + ny * a[1] + nz * a[2]
            tx = nx * t[0, 0] + ny * t[1, 0] + nz * t[2, 0]
            ty = nx * t[0, 1] + ny * t[1, 1] + nz * t[2, 1]
            tz = nx * t[0, 2] + ny * t[1, 2] + nz * t[2, 2]
            acc = 0.0
            for k in range(2):
                sgn = 1.0 if k == 0 else -1.0
                w = 1.0 + sgn * an
                p = 0.5 * w
                if p > _P_FLOOR:
                    mx = (b[0] + sgn * tx) / w
                    my = (b[1] + sgn * ty) / w
                    mz = (b[2] + sgn * tz) / w
                    r = sqrt(mx * mx + my * my + mz * mz)
                    if r > 1.0:
                        r = 1.0
                    acc += p * (1.0 - 0.5 * (_xlog2(1.0 - r) + _xlog2(1.0 + r)))
            out[i] = acc
    return out_arr


def dephased_gap_grid(object a_in, object t_in, object dirs_in):
    cdef double[::1] a = np.ascontiguousarray(a_in, dtype=np.float64)
    cdef double[:, ::1] t = np.ascontiguousarray(t_in, dtype=np.float64)
    cdef double[:, ::1] dirs = np.ascontiguousarray(dirs_in, dtype=np.float64)
    cdef Py_ssize_t n = dirs.shape[0]
    out_arr = np.zeros(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    cdef double nx, ny, nz, an, tx, ty, tz, base
    base = a[0] * a[0] + a[1] * a[1] + a[2] * a[2]
    for i in range(3):
        base += t[i, 0] * t[i, 0] + t[i, 1] * t[i, 1] + t[i, 2] * t[i, 2]
    with nogil:
        for i in range(n):
            nx = dirs[i, 0]; ny = dirs[i, 1]; nz = dirs[i, 2]
            an = nx * a[0] + ny * a[1] + nz * a[2]
            tx = nx * t[0, 0] + ny * t[1, 0] + nz * t[2, 0]
            ty = nx * t[0, 1] + ny * t[1, 1] + nz * t[2, 1]
            tz = nx * t[0, 2] + ny * t[1, 2] + nz * t[2, 2]
            out[i] = 0.25 * (base - an * an - (tx * tx + ty * ty + tz * tz))
    return out_arr


cdef inline void _sort3(double* v) noexcept nogil:
    cdef double tmp
    if v[0] > v[1]:
        tmp = v[0]; v[0] = v[1]; v[1] = tmp
    if v[1] > v[2]:
        tmp = v[1]; v[1] = v[2]; v[2] = tmp
    if v[0] > v[1]:
        tmp = v[0]; v[0] = v[1]; v[1] = tmp


def bd_measures(object c_in):
    cdef double[:, ::1] c = np.ascontiguousarray(np.atleast_2d(c_in), dtype=np.float64)
    cdef Py_ssize_t n = c.shape[0]
    out_arr = np.empty((n, 5), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i
    cdef double p[3]
    cdef double q[3]
    cdef double cmax, cls_e, mutual, a1, a2, a3, a4
    with nogil:
        for i in range(n):
            p[0] = c[i, 0]; p[1] = c[i, 1]; p[2] = c[i, 2]
            q[0] = abs(p[0]); q[1] = abs(p[1]); q[2] = abs(p[2])
            _sort3(p)
            _sort3(q)
            cmax = q[2]
            cls_e = 0.5 * (_xlog2(1.0 - cmax) + _xlog2(1.0 + cmax))
            a1 = 1.0 - p[0] - p[1] - p[2]
            a2 = 1.0 - p[0] + p[1] + p[2]
            a3 = 1.0 + p[0] - p[1] + p[2]
            a4 = 1.0 + p[0] + p[1] - p[2]
            mutual = 0.25 * (_xlog2(a1) + _xlog2(a2) + _xlog2(a3) + _xlog2(a4))
            out[i, 0] = mutual
            out[i, 1] = cls_e
            out[i, 2] = mutual - cls_e
            out[i, 3] = 0.25 * cmax * cmax
            out[i, 4] = 0.25 * (q[0] * q[0] + q[1] * q[1])
    return out_arr
