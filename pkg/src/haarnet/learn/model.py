"""Spectral graph convolution network for directed link prediction.

Layers propagate complex node embeddings through the renormalized Hermitian
operator of the chosen Laplacian kind (self-loops added to the symmetric
part), with ReLU applied separately to real and imaginary parts. Edge
samples are scored by concatenating the real/imaginary embeddings of both
endpoints and feeding them through dropout and a linear head.

Gradients are hand-derived reverse mode. Complex filter matrices are
treated as independent real/imaginary parameter pairs; a gradient array
``g`` stores dLoss/dRe in its real part and dLoss/dIm in its imaginary
part, which makes the chain rule through ``M = P Y Theta`` read
``g_Theta = (P Y)^H g_M`` and ``g_Y = P^H g_M Theta^H``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np
import scipy.sparse as sp

from ..graph import DirectedGraph
from ..laplacians import LaplacianKind

__all__ = [
    "Task",
    "DivergenceError",
    "HaarNetModel",
    "propagation_matrix",
    "degree_features",
    "identity_features",
    "init_model",
    "forward",
    "backward",
    "loss",
    "loss_and_grad",
    "predict",
]


class Task(Enum):
    """Link prediction flavors and their head widths."""

    EXISTENCE = "existence"
    THREE_CLASS = "three_class"
    WEIGHT = "weight"

    @property
    def output_width(self) -> int:
        return {"existence": 2, "three_class": 3, "weight": 1}[self.value]

    @property
    def is_classification(self) -> bool:
        return self is not Task.WEIGHT


class DivergenceError(RuntimeError):
    """Raised when activations or loss stop being finite."""


@dataclass
class HaarNetModel:
    """Layer filters (complex), linear head (real), and the task format."""

    kind: LaplacianKind
    task: Task
    thetas: list
    head_w: np.ndarray
    head_b: np.ndarray
    dropout: float = 0.5

    @property
    def embed_dim(self) -> int:
        return self.thetas[-1].shape[1]

    def parameters(self) -> list:
        """Mutable parameter arrays in a fixed order (optimizer contract)."""
        return [*self.thetas, self.head_w, self.head_b]

    def copy_parameters(self) -> list:
        return [p.copy() for p in self.parameters()]

    def load_parameters(self, values) -> None:
        for dst, src in zip(self.parameters(), values):
            dst[...] = src


def propagation_matrix(g: DirectedGraph, kind: LaplacianKind,
                       self_loop: float = 1.0) -> sp.csr_matrix:
    """Renormalized sparse Hermitian operator D~^{-1/2} H~ D~^{-1/2}.

    H~ is the kind's Hermitian matrix built from A_s + self_loop*I with the
    skew part (or phase pattern) of the original adjacency left unchanged.
    The self-loop keeps every absolute degree strictly positive.
    """
    n = g.n
    u, v, w = g.edge_arrays()
    a = sp.coo_matrix((w, (u, v)), shape=(n, n)).tocsr()
    sym = (a + a.T) * 0.5 + self_loop * sp.identity(n, format="csr")
    if kind.family == "haar":
        h = (sym + 0.5j * (a - a.T)).tocsr()
    elif kind.family == "magnetic":
        delta = (a - a.T).tocsr()
        if delta.nnz and kind.q * np.max(np.abs(delta.data)) > 0.5:
            warnings.warn(
                "magnetic phase ambiguity: q*max|a_uv - a_vu| > 1/2",
                RuntimeWarning, stacklevel=2)
        shift = delta.copy()
        shift.data = np.exp(2j * np.pi * kind.q * delta.data) - 1.0
        h = (sym + sym.multiply(shift)).tocsr()
    elif kind.family == "signmagnetic":
        delta = (a - a.T).tocsr()
        imbalance = (abs(a) - abs(a).T).tocsr()
        factor = (-_sparse_sign(abs(delta)) + 1j * _sparse_sign(imbalance)).tocsr()
        h = (sym + sym.multiply(factor)).tocsr()
    else:
        raise ValueError(f"propagation is defined for Hermitian kinds, not {kind.family!r}")
    h = h.astype(np.complex128)
    if __debug__:
        asym = abs(h - h.conj().T)
        assert asym.nnz == 0 or asym.max() <= 1e-12 * max(1.0, abs(h).max())
    deg = np.asarray(abs(h).sum(axis=1)).ravel()
    if np.any(deg <= 0):
        node = int(np.flatnonzero(deg <= 0)[0])
        raise ValueError(f"node {node} has zero absolute degree after self-loops")
    dinv = sp.diags(1.0 / np.sqrt(deg))
    out = (dinv @ h @ dinv).tocsr()
    out.sort_indices()
    return out


def _sparse_sign(m: sp.csr_matrix) -> sp.csr_matrix:
    out = m.copy()
    out.data = np.sign(out.data)
    return out


def degree_features(g: DirectedGraph) -> np.ndarray:
    """Standardized (out, in) absolute-degree pairs, one row per node."""
    u, v, w = g.edge_arrays()
    x = np.zeros((g.n, 2))
    np.add.at(x[:, 0], u, np.abs(w))
    np.add.at(x[:, 1], v, np.abs(w))
    mean = x.mean(axis=0)
    std = x.std(axis=0)
    return (x - mean) / np.where(std > 0, std, 1.0)


def identity_features(g: DirectedGraph) -> np.ndarray:
    return np.eye(g.n)


def init_model(kind: LaplacianKind, task: Task, n_layers: int, in_channels: int,
               d: int, dropout: float, rng: np.random.Generator) -> HaarNetModel:
    """Glorot-style initialization; real and imaginary parts split the
    variance of each complex filter."""
    if n_layers < 1:
        raise ValueError("need at least one convolution layer")
    thetas = []
    fan_in = in_channels
    for _ in range(n_layers):
        std = np.sqrt(1.0 / (fan_in + d))
        theta = std * (rng.standard_normal((fan_in, d))
                       + 1j * rng.standard_normal((fan_in, d)))
        thetas.append(theta)
        fan_in = d
    s = task.output_width
    head_w = np.sqrt(2.0 / (4 * d + s)) * rng.standard_normal((4 * d, s))
    head_b = np.zeros(s)
    return HaarNetModel(kind=kind, task=task, thetas=thetas,
                        head_w=head_w, head_b=head_b, dropout=dropout)


def forward(model: HaarNetModel, prop: sp.csr_matrix, x: np.ndarray,
            pairs: np.ndarray, training: bool = False,
            rng: np.random.Generator | None = None,
            dropout_mask: np.ndarray | None = None):
    """Full-batch forward pass; returns (output, cache for backward).

    ``pairs`` is the (e, 2) array of sample endpoints. In training mode an
    inverted-scaling dropout mask is sampled (or injected via
    ``dropout_mask`` for gradient checking) and kept in the cache so the
    backward pass sees the same mask.
    """
    if x.shape[0] != prop.shape[0]:
        raise ValueError(f"feature rows {x.shape[0]} != graph size {prop.shape[0]}")
    if x.shape[1] != model.thetas[0].shape[0]:
        raise ValueError(
            f"feature width {x.shape[1]} != first layer input {model.thetas[0].shape[0]}")
    pairs = np.asarray(pairs, dtype=np.int64)
    y = x.astype(np.complex128)
    propagated = []
    preacts = []
    for theta in model.thetas:
        py = prop @ y
        m = py @ theta
        propagated.append(py)
        preacts.append(m)
        y = np.maximum(np.real(m), 0.0) + 1j * np.maximum(np.imag(m), 0.0)

    feats = np.hstack([np.real(y[pairs[:, 0]]), np.imag(y[pairs[:, 0]]),
                       np.real(y[pairs[:, 1]]), np.imag(y[pairs[:, 1]])])
    assert np.isrealobj(feats)

    mask = None
    dropped = feats
    if training and model.dropout > 0.0:
        if dropout_mask is not None:
            mask = dropout_mask
        else:
            if rng is None:
                raise ValueError("training-mode forward needs an rng for dropout")
            mask = (rng.random(feats.shape) >= model.dropout).astype(np.float64)
        dropped = feats * mask / (1.0 - model.dropout)

    z = dropped @ model.head_w + model.head_b
    if not np.all(np.isfinite(z)):
        raise DivergenceError("non-finite network output")
    cache = {
        "pairs": pairs,
        "propagated": propagated,
        "preacts": preacts,
        "embeddings": y,
        "dropped": dropped,
        "mask": mask,
    }
    return z, cache


def backward(model: HaarNetModel, prop: sp.csr_matrix, cache: dict,
             d_z: np.ndarray) -> list:
    """Gradients for all parameters in ``model.parameters()`` order."""
    if not cache.get("preacts"):
        raise ValueError("backward needs the cache of a forward pass")
    pairs = cache["pairs"]
    d = model.embed_dim

    g_head_w = cache["dropped"].T @ d_z
    g_head_b = d_z.sum(axis=0)
    g_feats = d_z @ model.head_w.T
    if cache["mask"] is not None:
        g_feats = g_feats * cache["mask"] / (1.0 - model.dropout)

    g_y = np.zeros_like(cache["embeddings"])
    np.add.at(g_y, pairs[:, 0], g_feats[:, :d] + 1j * g_feats[:, d:2 * d])
    np.add.at(g_y, pairs[:, 1], g_feats[:, 2 * d:3 * d] + 1j * g_feats[:, 3 * d:])

    prop_h = prop.conj().T.tocsr()
    g_thetas = [None] * len(model.thetas)
    for layer in range(len(model.thetas) - 1, -1, -1):
        m = cache["preacts"][layer]
        # ReLU subgradient is 0 at 0 (strict positivity test), separately
        # on the real and imaginary parts.
        g_m = (np.real(g_y) * (np.real(m) > 0.0)
               + 1j * (np.imag(g_y) * (np.imag(m) > 0.0)))
        g_thetas[layer] = cache["propagated"][layer].conj().T @ g_m
        if layer > 0:
            g_y = prop_h @ g_m @ model.thetas[layer].conj().T
    return [*g_thetas, g_head_w, g_head_b]


def loss(z: np.ndarray, labels: np.ndarray, task: Task) -> float:
    return loss_and_grad(z, labels, task)[0]


def loss_and_grad(z: np.ndarray, labels: np.ndarray, task: Task):
    """Loss value and its gradient with respect to the network output.

    Mean squared error for weight regression; negative log likelihood over
    log-softmax rows for the classification tasks.
    """
    z = np.asarray(z, dtype=np.float64)
    e = z.shape[0]
    if z.ndim != 2 or z.shape[1] != task.output_width:
        raise ValueError(f"expected output shape ({e}, {task.output_width}), got {z.shape}")
    if len(labels) != e:
        raise ValueError("labels and outputs disagree in length")
    if task is Task.WEIGHT:
        y = np.asarray(labels, dtype=np.float64)
        resid = z[:, 0] - y
        return float(np.mean(resid ** 2)), (2.0 / e) * resid[:, None]
    y = np.asarray(labels)
    if np.any(y < 0) or np.any(y >= task.output_width):
        raise ValueError(f"class id out of range for {task.value}")
    shifted = z - z.max(axis=1, keepdims=True)
    log_softmax = shifted - np.log(np.exp(shifted).sum(axis=1, keepdims=True))
    value = float(-np.mean(log_softmax[np.arange(e), y]))
    d_z = np.exp(log_softmax)
    d_z[np.arange(e), y] -= 1.0
    return value, d_z / e


def predict(z: np.ndarray, task: Task) -> np.ndarray:
    """Class ids (argmax) for classification, raw values for regression."""
    if task is Task.WEIGHT:
        return np.asarray(z)[:, 0]
    return np.argmax(z, axis=1)
