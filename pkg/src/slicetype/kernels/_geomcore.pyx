# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of slicetype.kernels._purepy.

Same packed-table contract and the same half-open membership conventions.
Every classification step is a single IEEE multiply, add, or compare with
the same association as the pure backend, and the build disables fused
multiply-add contraction, so the two backends match bit for bit.
"""

import numpy as np


cdef int _classify_one(
    double x,
    double y,
    double[:, ::1] sec_geom,
    int[::1] sec_owner,
    double[:, ::1] rect_geom,
    int[::1] rect_owner,
) noexcept nogil:
    cdef double r_sq = x * x + y * y
    cdef double px = x
    cdef double py = y
    cdef double flag, cross_s, dot_s, cross_e, dot_e
    cdef bint after_start, before_end
    cdef Py_ssize_t i
    if px == 0.0 and py == 0.0:
        px = 1.0
        py = 0.0
    for i in range(sec_geom.shape[0]):
        if r_sq < sec_geom[i, 0] or r_sq >= sec_geom[i, 1]:
            continue
        flag = sec_geom[i, 6]
        if flag == 2.0:
            return sec_owner[i]
        cross_s = sec_geom[i, 2] * py - sec_geom[i, 3] * px
        dot_s = sec_geom[i, 2] * px + sec_geom[i, 3] * py
        cross_e = sec_geom[i, 4] * py - sec_geom[i, 5] * px
        dot_e = sec_geom[i, 4] * px + sec_geom[i, 5] * py
        after_start = cross_s > 0.0 or (cross_s == 0.0 and dot_s > 0.0)
        before_end = cross_e < 0.0 or (cross_e == 0.0 and dot_e < 0.0)
        if flag == 1.0:
            if after_start or before_end:
                return sec_owner[i]
        elif after_start and before_end:
            return sec_owner[i]
    for i in range(rect_geom.shape[0]):
        if (
            x >= rect_geom[i, 0]
            and x < rect_geom[i, 1]
            and y >= rect_geom[i, 2]
            and y < rect_geom[i, 3]
        ):
            return rect_owner[i]
    return -1


def classify_point(
    double x,
    double y,
    sec_geom,
    sec_owner,
    rect_geom,
    rect_owner,
):
    """Classify one point; returns the owning region index or -1."""
    cdef double[:, ::1] sg = np.ascontiguousarray(sec_geom, dtype=np.float64)
    cdef int[::1] so = np.ascontiguousarray(sec_owner, dtype=np.int32)
    cdef double[:, ::1] rg = np.ascontiguousarray(rect_geom, dtype=np.float64)
    cdef int[::1] ro = np.ascontiguousarray(rect_owner, dtype=np.int32)
    return _classify_one(x, y, sg, so, rg, ro)


def classify_batch(
    xs,
    ys,
    sec_geom,
    sec_owner,
    rect_geom,
    rect_owner,
):
    """Classify many points; returns int32 region indices, -1 for none."""
    cdef double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[::1] yv = np.ascontiguousarray(ys, dtype=np.float64)
    cdef double[:, ::1] sg = np.ascontiguousarray(sec_geom, dtype=np.float64)
    cdef int[::1] so = np.ascontiguousarray(sec_owner, dtype=np.int32)
    cdef double[:, ::1] rg = np.ascontiguousarray(rect_geom, dtype=np.float64)
    cdef int[::1] ro = np.ascontiguousarray(rect_owner, dtype=np.int32)
    out_arr = np.empty(xv.shape[0], dtype=np.int32)
    cdef int[::1] out = out_arr
    cdef Py_ssize_t i
    with nogil:
        for i in range(xv.shape[0]):
            out[i] = _classify_one(xv[i], yv[i], sg, so, rg, ro)
    return out_arr
