"""Hermitian eigendecomposition and the graph Fourier transform.

The eigenvector matrix of a Hermitian Laplacian is unitary, so the GFT
``x_hat = U^H x`` and its inverse ``x = U x_hat`` are norm-preserving.
Eigenvalues act as graph frequencies, ascending = low to high.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrices import require_hermitian

__all__ = [
    "MAX_DENSE_DIM",
    "Spectrum",
    "hermitian_eig",
    "cycle_frequencies",
    "gft",
    "igft",
    "truncate_spectrum",
    "signed_magnitude",
]

# Dense eigendecomposition cost cap; larger problems need an iterative
# solver, which this library deliberately does not provide.
MAX_DENSE_DIM = 3000


@dataclass(frozen=True)
class Spectrum:
    """Eigendecomposition L = U diag(lambda) U^H with ascending eigenvalues.

    ``vectors[:, k]`` pairs with ``eigenvalues[k]``; the columns are
    orthonormal and each is phased so its largest-modulus entry is real
    positive (deterministic representative).
    """

    eigenvalues: np.ndarray
    vectors: np.ndarray

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]


def hermitian_eig(h: np.ndarray) -> Spectrum:
    """Full eigendecomposition of a dense Hermitian matrix.

    Validates Hermitian symmetry, rejects n > MAX_DENSE_DIM, and returns
    ascending eigenvalues with a fixed per-column phase convention so that
    repeated runs (and golden files) see identical output.
    """
    h = require_hermitian(np.asarray(h))
    if h.shape[0] > MAX_DENSE_DIM:
        raise ValueError(
            f"matrix dimension {h.shape[0]} exceeds dense eigendecomposition "
            f"cap {MAX_DENSE_DIM}")
    eigenvalues, vectors = np.linalg.eigh(h)
    return Spectrum(eigenvalues, _fix_phases(np.asarray(vectors, dtype=np.complex128)))


def _fix_phases(vectors: np.ndarray) -> np.ndarray:
    """Rotate each column so its largest-modulus entry (lowest index on ties)
    is real positive."""
    mods = np.abs(vectors)
    anchor = np.argmax(mods, axis=0)
    cols = np.arange(vectors.shape[1])
    pivots = vectors[anchor, cols]
    phases = np.where(np.abs(pivots) > 0, pivots / np.abs(pivots), 1.0)
    return vectors * np.conj(phases)[None, :]


def cycle_frequencies(n: int) -> np.ndarray:
    """Closed-form Haar-Laplacian eigenvalues of the directed n-cycle.

    sqrt(2) - cos(2 pi j / n) - sin(2 pi j / n) for j = 0..n-1, in j order
    (not sorted). Valid for n >= 3; at n = 2 the forward and backward shift
    overlap into a digon and the closed form no longer applies.
    """
    if n < 2:
        raise ValueError(f"cycle needs at least 2 nodes, got {n}")
    j = np.arange(n)
    ang = 2.0 * np.pi * j / n
    return np.sqrt(2.0) - np.cos(ang) - np.sin(ang)


def gft(spectrum: Spectrum, x: np.ndarray) -> np.ndarray:
    """Forward transform x_hat = U^H x."""
    x = np.asarray(x)
    if x.shape[0] != spectrum.n:
        raise ValueError(f"signal length {x.shape[0]} != graph size {spectrum.n}")
    return spectrum.vectors.conj().T @ x


def igft(spectrum: Spectrum, x_hat: np.ndarray) -> np.ndarray:
    """Inverse transform x = U x_hat."""
    x_hat = np.asarray(x_hat)
    if x_hat.shape[0] != spectrum.n:
        raise ValueError(f"coefficient length {x_hat.shape[0]} != graph size {spectrum.n}")
    return spectrum.vectors @ x_hat


def truncate_spectrum(x_hat: np.ndarray, m: int) -> np.ndarray:
    """Keep the m lowest-frequency coefficients, zero the rest."""
    x_hat = np.asarray(x_hat)
    if not 1 <= m <= x_hat.shape[0]:
        raise ValueError(f"m must be in [1, {x_hat.shape[0]}], got {m}")
    out = np.zeros_like(x_hat)
    out[:m] = x_hat[:m]
    return out


def signed_magnitude(vectors: np.ndarray) -> np.ndarray:
    """Real heatmap representation sign(Re u) * |u| of complex eigenvectors."""
    vectors = np.asarray(vectors)
    return np.sign(np.real(vectors)) * np.abs(vectors)
