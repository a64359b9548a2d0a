"""Pairwise distance kernels.

Each kernel has a numba version and a numpy version with identical results.
``symbolic_cross`` sums fixed-point integers, so both paths agree exactly;
``euclidean_cross`` agrees to rounding.
"""

import numpy as np

from ._accel import HAVE_NUMBA, njit, prange

# numpy fallback works on row blocks to bound the (rows x cols x m) gather
_BLOCK_ELEMS = 1 << 22


def symbolic_cross_numpy(A, B, lookup_fixed):
    """Fixed-point sum of squared cell distances for every (row of A, row of B).

    ``A`` and ``B`` hold 0-based symbol codes.
    """
    na, m = A.shape
    nb = B.shape[0]
    out = np.empty((na, nb), dtype=np.int64)
    step = max(1, _BLOCK_ELEMS // max(1, nb * m))
    for lo in range(0, na, step):
        hi = min(na, lo + step)
        cells = lookup_fixed[A[lo:hi, np.newaxis, :], B[np.newaxis, :, :]]
        out[lo:hi] = cells.sum(axis=2)
    return out


def euclidean_cross_numpy(X, Y):
    """Squared Euclidean distance for every (row of X, row of Y)."""
    nx = X.shape[0]
    ny, n = Y.shape
    out = np.empty((nx, ny), dtype=np.float64)
    step = max(1, _BLOCK_ELEMS // max(1, ny * n))
    for lo in range(0, nx, step):
        hi = min(nx, lo + step)
        diff = X[lo:hi, np.newaxis, :] - Y[np.newaxis, :, :]
        out[lo:hi] = np.einsum("ijk,ijk->ij", diff, diff)
    return out


@njit(parallel=True, cache=True)
def _symbolic_cross_jit(A, B, lookup_fixed):
    na, m = A.shape
    nb = B.shape[0]
    out = np.empty((na, nb), dtype=np.int64)
    for i in prange(na):
        for j in range(nb):
            acc = 0
            for k in range(m):
                acc += lookup_fixed[A[i, k], B[j, k]]
            out[i, j] = acc
    return out


@njit(parallel=True, cache=True)
def _euclidean_cross_jit(X, Y):
    nx, n = X.shape
    ny = Y.shape[0]
    out = np.empty((nx, ny), dtype=np.float64)
    for i in prange(nx):
        for j in range(ny):
            acc = 0.0
            for k in range(n):
                d = X[i, k] - Y[j, k]
                acc += d * d
            out[i, j] = acc
    return out


if HAVE_NUMBA:
    symbolic_cross = _symbolic_cross_jit
    euclidean_cross = _euclidean_cross_jit
else:
    symbolic_cross = symbolic_cross_numpy
    euclidean_cross = euclidean_cross_numpy
