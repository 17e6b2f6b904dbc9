# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled simplex pivot loop.

Mirror of ``_simplex_py.simplex_iterate``: same Bland entering rule, same
ratio test and tie-break, same row operations in the same order, so pivot
sequences and all non-zero tableau values match the NumPy kernel bit for bit
(the extension is built with -ffp-contract=off to keep it that way).
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"

STATUS_OPTIMAL = 0
STATUS_UNBOUNDED = 1
STATUS_ITER_LIMIT = 2
STATUS_SINGULAR = 3


def simplex_iterate(double[:, ::1] T, long long[::1] basis, Py_ssize_t n_enter,
                    Py_ssize_t obj_row, double tol_cost, double tol_pivot,
                    double tol_singular, long long max_iter):
    """See ``_simplex_py.simplex_iterate``; returns (status, iterations)."""
    cdef Py_ssize_t m = basis.shape[0]
    cdef Py_ssize_t nrows = T.shape[0]
    cdef Py_ssize_t rhs = T.shape[1] - 1
    cdef Py_ssize_t it, j, i, k, col, row
    cdef double piv, f, ratio, best_ratio, r
    cdef long long best_basis

    for it in range(max_iter):
        col = -1
        for j in range(n_enter):
            if T[obj_row, j] < -tol_cost:
                col = j
                break
        if col < 0:
            return STATUS_OPTIMAL, it

        row = -1
        best_ratio = 0.0
        best_basis = 0
        for i in range(m):
            piv = T[i, col]
            if piv > tol_pivot:
                r = T[i, rhs]
                if r < 0.0:
                    r = 0.0
                ratio = r / piv
                if row < 0 or ratio < best_ratio or (
                        ratio == best_ratio and basis[i] < best_basis):
                    row = i
                    best_ratio = ratio
                    best_basis = basis[i]
        if row < 0:
            return STATUS_UNBOUNDED, it

        piv = T[row, col]
        if piv <= tol_singular and piv >= -tol_singular:
            return STATUS_SINGULAR, it

        for k in range(rhs + 1):
            T[row, k] /= piv
        for i in range(nrows):
            if i == row:
                continue
            f = T[i, col]
            if f != 0.0:
                for k in range(rhs + 1):
                    T[i, k] -= f * T[row, k]
        for i in range(nrows):
            T[i, col] = 0.0
        T[row, col] = 1.0
        basis[row] = col
    return STATUS_ITER_LIMIT, max_iter
