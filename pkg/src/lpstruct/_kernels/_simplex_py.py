"""Pure-NumPy simplex pivot loop (reference kernel).

The compiled kernel in ``_simplex_cy`` implements the same loop; both must
take identical pivot decisions on identical inputs, so any change to the
entering/leaving rules here has to be mirrored there.
"""

import numpy as np

BACKEND = "python"

STATUS_OPTIMAL = 0
STATUS_UNBOUNDED = 1
STATUS_ITER_LIMIT = 2
STATUS_SINGULAR = 3


def simplex_iterate(T, basis, n_enter, obj_row, tol_cost, tol_pivot,
                    tol_singular, max_iter):
    """Run Bland-rule pivots on tableau ``T`` in place.

    T        : (R, C) float64 array; rows 0..len(basis)-1 are constraint rows,
               remaining rows are cost rows that get eliminated but only
               ``obj_row`` supplies reduced costs; last column is the rhs.
    basis    : int64 array, basis[i] = column currently basic in row i.
    n_enter  : entering candidates are columns 0..n_enter-1 (columns past
               this bound, e.g. artificials in phase two, never re-enter).

    Returns (status, iterations).  On STATUS_SINGULAR the iteration count is
    the index of the offending pivot step.
    """
    m = basis.shape[0]
    rhs = T.shape[1] - 1
    for it in range(max_iter):
        red = T[obj_row, :n_enter]
        neg = np.flatnonzero(red < -tol_cost)
        if neg.size == 0:
            return STATUS_OPTIMAL, it
        col = int(neg[0])  # Bland: smallest improving index

        piv_col = T[:m, col]
        elig = piv_col > tol_pivot
        if not elig.any():
            return STATUS_UNBOUNDED, it
        ratios = np.where(
            elig,
            np.maximum(T[:m, rhs], 0.0) / np.where(elig, piv_col, 1.0),
            np.inf,
        )
        rmin = ratios.min()
        cand = np.flatnonzero(ratios == rmin)
        row = int(cand[np.argmin(basis[cand])])  # Bland tie-break

        piv = T[row, col]
        if abs(piv) <= tol_singular:
            return STATUS_SINGULAR, it

        T[row, :] /= piv
        factors = T[:, col].copy()
        factors[row] = 0.0
        T -= factors[:, None] * T[row, None, :]
        T[:, col] = 0.0
        T[row, col] = 1.0
        basis[row] = col
    return STATUS_ITER_LIMIT, max_iter
