"""Laplacian families for directed graphs.

Four constructions over one degree/LAplacian skeleton ``L = D - H`` with
``D = diag(|H| 1)``:

* standard: ``H = A`` (Hermitian only when the graph is symmetric);
* haar: ``H = A_s + i A_a``, the symmetric/skew split mapped one-to-one
  onto a Hermitian matrix;
* magnetic: ``H = A_s * exp(i 2 pi q (A - A^T))``, direction coded as phase;
* sign-magnetic: phase replaced by the sign pattern of the directional
  imbalance, scale-robust but blind to digon weight disparity.

Normalized variants are ``I - D^{-1/2} H D^{-1/2}``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .graph import DirectedGraph, adjacency
from .matrices import (
    abs_degree,
    require_hermitian,
    require_zero_diagonal,
    skew_symmetrize,
    symmetrize,
)

__all__ = [
    "LaplacianKind",
    "haar_hermitian",
    "haar_inverse",
    "magnetic_hermitian",
    "sign_magnetic_hermitian",
    "hermitian_matrix",
    "laplacian",
]

_FAMILIES = ("standard", "haar", "magnetic", "signmagnetic")


@dataclass(frozen=True)
class LaplacianKind:
    """Which Laplacian family to build, with its parameters.

    ``q`` is meaningful only for the magnetic family and must be >= 0.
    """

    family: str
    q: float = 0.0
    normalized: bool = False

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {_FAMILIES}")
        if self.q < 0:
            raise ValueError(f"q must be nonnegative, got {self.q}")
        if self.family != "magnetic" and self.q != 0.0:
            raise ValueError(f"q is only meaningful for the magnetic family")

    @classmethod
    def standard(cls, normalized: bool = False) -> "LaplacianKind":
        return cls("standard", normalized=normalized)

    @classmethod
    def haar(cls, normalized: bool = False) -> "LaplacianKind":
        return cls("haar", normalized=normalized)

    @classmethod
    def magnetic(cls, q: float, normalized: bool = False) -> "LaplacianKind":
        return cls("magnetic", q=float(q), normalized=normalized)

    @classmethod
    def sign_magnetic(cls, normalized: bool = False) -> "LaplacianKind":
        return cls("signmagnetic", normalized=normalized)

    @classmethod
    def parse(cls, text: str, normalized: bool = False) -> "LaplacianKind":
        """Parse CLI-style labels: 'haar', 'magnetic:0.25', 'signmagnetic', 'standard'."""
        name, _, qtext = text.strip().lower().partition(":")
        if name == "magnetic":
            if not qtext:
                raise ValueError("magnetic kind needs a q value, e.g. 'magnetic:0.25'")
            return cls.magnetic(float(qtext), normalized=normalized)
        if qtext:
            raise ValueError(f"kind {name!r} takes no parameter")
        return cls(name, normalized=normalized)

    @property
    def label(self) -> str:
        """Round-trippable text label used in CSV output."""
        if self.family == "magnetic":
            return f"magnetic:{self.q:g}"
        return self.family


def haar_hermitian(a: np.ndarray) -> np.ndarray:
    """Hermitian matrix A_s + i A_a of a real zero-diagonal square matrix.

    Entry moduli obey |h_uv| = sqrt((a_uv^2 + a_vu^2) / 2); the map is
    one-to-one, continuous, and commutes with scaling.
    """
    a = _real_zero_diag(a)
    return symmetrize(a) + 1j * skew_symmetrize(a)


def haar_inverse(h: np.ndarray) -> np.ndarray:
    """Recover the real matrix A from its Hermitian image: A = Re(H) + Im(H)."""
    h = require_hermitian(np.asarray(h, dtype=np.complex128))
    require_zero_diagonal(h)
    return np.real(h) + np.imag(h)


def magnetic_hermitian(a: np.ndarray, q: float) -> np.ndarray:
    """Phase-coded Hermitian matrix A_s * exp(i 2 pi q (A - A^T)).

    Warns when q * max|a_uv - a_vu| > 1/2: the phase then leaves (-pi, pi]
    and loses its orientation meaning (wrap-around, not an error).
    """
    a = _real_zero_diag(a)
    if q < 0:
        raise ValueError(f"q must be nonnegative, got {q}")
    delta = a - a.T
    if delta.size and q * np.max(np.abs(delta)) > 0.5:
        warnings.warn(
            f"magnetic phase ambiguity: q*max|a_uv - a_vu| = {q * np.max(np.abs(delta)):.4g} > 1/2",
            RuntimeWarning,
            stacklevel=2,
        )
    return symmetrize(a) * np.exp(2j * np.pi * q * delta)


def sign_magnetic_hermitian(a: np.ndarray) -> np.ndarray:
    """Sign-pattern Hermitian matrix A_s * (1 - sgn|A - A^T| + i sgn(|A| - |A^T|)).

    sgn(0) = 0 exactly, with no tolerance band: float noise near weight
    equality flips the output (the construction is discontinuous there).
    """
    a = _real_zero_diag(a)
    abs_a = np.abs(a)
    mult = 1.0 - np.sign(np.abs(a - a.T)) + 1j * np.sign(abs_a - abs_a.T)
    return symmetrize(a) * mult


def hermitian_matrix(a: np.ndarray, kind: LaplacianKind) -> np.ndarray:
    """The kind's matrix H in L = D - H (for 'standard' this is A itself)."""
    if kind.family == "standard":
        return np.asarray(a, dtype=np.float64).copy()
    if kind.family == "haar":
        return haar_hermitian(a)
    if kind.family == "magnetic":
        return magnetic_hermitian(a, kind.q)
    return sign_magnetic_hermitian(a)


def laplacian(g: DirectedGraph, kind: LaplacianKind) -> np.ndarray:
    """Build the graph's Laplacian: D - H, or I - D^{-1/2} H D^{-1/2} if normalized.

    D holds the row sums of |H|, so it stays positive for negative weights.
    Normalization requires every degree to be strictly positive.
    """
    a = adjacency(g)
    h = hermitian_matrix(a, kind)
    d = abs_degree(h)
    if kind.family != "standard":
        assert np.max(np.abs(h - h.conj().T), initial=0.0) <= 1e-12 * max(1.0, np.max(np.abs(h), initial=0.0))
    if kind.normalized:
        if np.any(d <= 0):
            node = int(np.flatnonzero(d <= 0)[0])
            raise ValueError(
                f"cannot normalize: node {node} has zero absolute degree")
        dinv = 1.0 / np.sqrt(d)
        return np.eye(g.n, dtype=h.dtype) - (dinv[:, None] * h) * dinv[None, :]
    return np.diag(d.astype(h.dtype)) - h


def _real_zero_diag(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.float64)
    require_zero_diagonal(a)
    return a
