"""Benchmark graph constructions: directed cycles, three-cluster digon
graphs, and seeded random geometric digraphs with the plane test signal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph import DirectedGraph

__all__ = [
    "directed_cycle",
    "g15",
    "GeoGraphParams",
    "GeometricGraph",
    "random_geometric",
    "plane_signal",
]


def directed_cycle(n: int) -> DirectedGraph:
    """Cycle 0 -> 1 -> ... -> n-1 -> 0 with unit weights.

    The adjacency matrix is the circulant shift pattern. n = 2 degenerates
    to a digon and is allowed.
    """
    if n < 2:
        raise ValueError(f"cycle needs at least 2 nodes, got {n}")
    return DirectedGraph(n, tuple((u, (u + 1) % n, 1.0) for u in range(n)))


# Inter-cluster edges per variant. Clusters are {0-4}, {5-9}, {10-14} with
# node 0 of each cluster as its representative endpoint; variant c's edges
# form a directed cycle over the representatives.
_G15_LINKS = {
    "a": ((0, 5), (5, 10)),
    "b": ((0, 5), (5, 10), (0, 10)),
    "c": ((0, 5), (5, 10), (10, 0)),
}


def g15(variant: str) -> DirectedGraph:
    """Three 5-node clusters of unit-weight digons plus a few directed
    inter-cluster edges (2 for variant 'a', 3 for 'b', 3 forming a cycle
    for 'c')."""
    key = variant.strip().lower()
    if key not in _G15_LINKS:
        raise ValueError(f"unknown variant {variant!r}; expected one of a, b, c")
    edges = []
    for base in (0, 5, 10):
        for u, v in combinations(range(base, base + 5), 2):
            edges.append((u, v, 1.0))
            edges.append((v, u, 1.0))
    edges.extend((u, v, 1.0) for u, v in _G15_LINKS[key])
    return DirectedGraph(15, tuple(edges))


@dataclass(frozen=True)
class GeoGraphParams:
    """Random geometric digraph parameters.

    Nodes get uniform coordinates in the unit square; pairs within distance
    ``r`` are connected, as a digon with probability ``p`` and otherwise in a
    uniformly random single direction. Each emitted edge draws its weight
    independently from U[w_min, w_max].
    """

    n: int
    r: float
    p: float = 0.5
    w_min: float = 0.8
    w_max: float = 1.2
    seed: int = 0

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError("n must be positive")
        if self.r < 0:
            raise ValueError("r must be nonnegative")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("digon probability must be in [0, 1]")
        if self.w_min > self.w_max:
            raise ValueError("w_min must not exceed w_max")


@dataclass(frozen=True)
class GeometricGraph:
    graph: DirectedGraph
    coords: np.ndarray  # (n, 2) node positions in the unit square


def random_geometric(params: GeoGraphParams) -> GeometricGraph:
    """Sample a geometric digraph; bit-reproducible for a fixed seed.

    All per-pair decisions (digon, direction, both weights) are drawn for
    every node pair in a fixed order before the radius filter is applied,
    so growing ``r`` only ever adds edges and never reshuffles the rest.
    """
    rng = np.random.default_rng(params.seed)
    coords = rng.uniform(0.0, 1.0, size=(params.n, 2))
    iu, iv = np.triu_indices(params.n, k=1)
    digon = rng.random(iu.size) < params.p
    forward = rng.random(iu.size) < 0.5
    w_uv = rng.uniform(params.w_min, params.w_max, iu.size)
    w_vu = rng.uniform(params.w_min, params.w_max, iu.size)
    dist = np.hypot(coords[iu, 0] - coords[iv, 0], coords[iu, 1] - coords[iv, 1])
    edges = []
    for k in np.flatnonzero(dist <= params.r):
        u, v = int(iu[k]), int(iv[k])
        if digon[k] or forward[k]:
            edges.append((u, v, float(w_uv[k])))
        if digon[k] or not forward[k]:
            edges.append((v, u, float(w_vu[k])))
    return GeometricGraph(DirectedGraph(params.n, tuple(edges)), coords)


def plane_signal(coords: np.ndarray) -> np.ndarray:
    """Smooth test signal z = 10 + 10 x + 5 y over node coordinates."""
    coords = np.asarray(coords, dtype=np.float64)
    if coords.ndim != 2 or coords.shape[1] != 2:
        raise ValueError(f"expected (n, 2) coordinates, got shape {coords.shape}")
    return 10.0 + 10.0 * coords[:, 0] + 5.0 * coords[:, 1]
