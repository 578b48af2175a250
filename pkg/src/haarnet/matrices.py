"""Dense/sparse complex matrix plumbing shared by the Laplacian builders.

Dense matrices are plain ``numpy`` arrays (complex128 or float64); sparse
complex matrices are ``scipy.sparse`` CSR built through :func:`sparse_complex`,
which enforces the coordinate invariants (in-range indices, no duplicates,
no stored zeros).
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp

__all__ = [
    "symmetrize",
    "skew_symmetrize",
    "abs_degree",
    "is_hermitian",
    "require_hermitian",
    "require_zero_diagonal",
    "sparse_complex",
    "matmul",
    "matvec",
    "conjugate_transpose",
    "scale",
    "add",
]

HERMITIAN_TOL = 1e-12


def _require_square(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def symmetrize(a: np.ndarray) -> np.ndarray:
    """Symmetric part (A + A^T)/2 of a real square matrix."""
    a = _require_square(a)
    return (a + a.T) / 2.0


def skew_symmetrize(a: np.ndarray) -> np.ndarray:
    """Skew-symmetric part (A - A^T)/2 of a real square matrix."""
    a = _require_square(a)
    return (a - a.T) / 2.0


def abs_degree(m) -> np.ndarray:
    """Row sums of entrywise moduli: d[u] = sum_v |m[u, v]|.

    Accepts dense arrays or scipy sparse matrices; returns a real vector.
    """
    if sp.issparse(m):
        if m.shape[0] != m.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {m.shape}")
        return np.asarray(abs(m).sum(axis=1)).ravel().astype(np.float64)
    m = _require_square(m)
    return np.abs(m).sum(axis=1).astype(np.float64)


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    """True if ``m`` equals its conjugate transpose within ``tol`` (scaled)."""
    m = _require_square(m)
    scale_ = max(1.0, float(np.max(np.abs(m))) if m.size else 0.0)
    return bool(np.max(np.abs(m - m.conj().T), initial=0.0) <= tol * scale_)


def require_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> np.ndarray:
    m = _require_square(m)
    if not is_hermitian(m, tol):
        raise ValueError("matrix is not Hermitian within tolerance "
                         f"{tol} (max asymmetry {np.max(np.abs(m - m.conj().T)):.3e})")
    return m


def require_zero_diagonal(m: np.ndarray) -> np.ndarray:
    m = _require_square(m)
    if m.size and np.any(np.diagonal(m) != 0):
        bad = int(np.flatnonzero(np.diagonal(m))[0])
        raise ValueError(f"nonzero diagonal entry at node {bad}")
    return m


def sparse_complex(rows, cols, values, shape) -> sp.csr_matrix:
    """CSR complex matrix from coordinate triplets.

    Duplicate (row, col) pairs are an error, indices must be in range, and
    exact zeros are dropped rather than stored.
    """
    rows = np.asarray(rows, dtype=np.int64)
    cols = np.asarray(cols, dtype=np.int64)
    values = np.asarray(values, dtype=np.complex128)
    n_rows, n_cols = shape
    if rows.shape != cols.shape or rows.shape != values.shape:
        raise ValueError("rows, cols, values must have equal lengths")
    if rows.size:
        if rows.min(initial=0) < 0 or rows.max(initial=0) >= n_rows:
            raise ValueError("row index out of range")
        if cols.min(initial=0) < 0 or cols.max(initial=0) >= n_cols:
            raise ValueError("column index out of range")
        flat = rows * n_cols + cols
        if np.unique(flat).size != flat.size:
            raise ValueError("duplicate (row, col) triplets")
    keep = values != 0
    m = sp.coo_matrix((values[keep], (rows[keep], cols[keep])), shape=shape).tocsr()
    m.sort_indices()
    return m


def matmul(a, b):
    """Matrix product with an explicit dimension check (dense or sparse)."""
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"matmul dimension mismatch: {a.shape} x {b.shape}")
    return a @ b


def matvec(m, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x)
    if x.ndim != 1 or m.shape[1] != x.shape[0]:
        raise ValueError(f"matvec dimension mismatch: {m.shape} x {x.shape}")
    return m @ x


def conjugate_transpose(m):
    if sp.issparse(m):
        return m.conj().T.tocsr()
    return np.asarray(m).conj().T


def scale(m, c):
    return m * c


def add(a, b):
    if a.shape != b.shape:
        raise ValueError(f"add shape mismatch: {a.shape} vs {b.shape}")
    return a + b
