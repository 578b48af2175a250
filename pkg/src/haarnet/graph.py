"""Directed graph representation and its adjacency matrix.

The edge list is the canonical form; matrices are derived from it and never
stored back. Weights are real, nonzero, and may be negative.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = ["DirectedGraph", "adjacency"]


@dataclass(frozen=True)
class DirectedGraph:
    """Simple weighted digraph: ``n`` nodes, edges ``(u, v, w)`` with ``w != 0``.

    No self-loops, at most one edge per ordered pair. Immutable after
    construction and safe to share across threads.
    """

    n: int
    edges: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError(f"node count must be positive, got {self.n}")
        edges = tuple((int(u), int(v), float(w)) for u, v, w in self.edges)
        object.__setattr__(self, "edges", edges)
        seen = set()
        for u, v, w in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"self-loop at node {u} not allowed")
            if w == 0.0:
                raise ValueError(f"edge ({u},{v}) has zero weight")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v}); merging would corrupt weights")
            seen.add((u, v))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_set(self) -> set:
        """Set of ordered pairs (u, v) that carry an edge."""
        return {(u, v) for u, v, _ in self.edges}

    def edge_arrays(self):
        """Edges as three aligned arrays (sources, targets, weights)."""
        if not self.edges:
            return (np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64),
                    np.empty(0, dtype=np.float64))
        a = np.asarray(self.edges, dtype=np.float64)
        return a[:, 0].astype(np.int64), a[:, 1].astype(np.int64), a[:, 2]

    def weak_degrees(self) -> np.ndarray:
        """Number of incident edges per node, ignoring direction."""
        deg = np.zeros(self.n, dtype=np.int64)
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


def adjacency(g: DirectedGraph) -> np.ndarray:
    """Dense adjacency matrix: A[u, v] = w for each edge (u, v, w), else 0."""
    a = np.zeros((g.n, g.n), dtype=np.float64)
    u, v, w = g.edge_arrays()
    a[u, v] = w
    return a
