"""Weighted undirected graphs and the matrix constructions built on them.

Everything here is a pure function over an immutable :class:`WeightedGraph`:
adjacency, degree and Laplacian matrices, node removal, per-node edge
scaling, the per-node intermediate matrix whose spectrum mirrors the scaled
Laplacian, and the disk-based proximity model for planar layouts.

Weights are stored densely; the intended scale is a few hundred nodes, where
dense O(n^2) storage and O(n^3) eigensolves are cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GraphInputError, PreconditionError

NodeId = int


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected graph on nodes 0..n-1 with a symmetric nonnegative weight matrix.

    ``weights[i, j] > 0`` means an edge between i and j. The diagonal is zero
    (no self loops). ``positions`` optionally carries the 2D point each node
    was placed at when the graph came from a proximity model.

    Instances are immutable after construction; the arrays are marked
    read-only, so graphs are safe to share across threads.
    """

    n: int
    weights: np.ndarray
    positions: np.ndarray | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphInputError(f"node count must be >= 1, got {self.n}")
        w = np.array(self.weights, dtype=float)
        if w.shape != (self.n, self.n):
            raise GraphInputError(
                f"weight matrix shape {w.shape} does not match n={self.n}"
            )
        if not np.array_equal(w, w.T):
            raise GraphInputError("weight matrix must be symmetric")
        if np.any(np.diag(w) != 0.0):
            raise GraphInputError("self loops are not allowed (nonzero diagonal)")
        if np.any(w < 0.0):
            raise GraphInputError("weights must be nonnegative")
        object.__setattr__(self, "weights", _readonly(w))
        if self.positions is not None:
            p = np.array(self.positions, dtype=float)
            if p.shape != (self.n, 2):
                raise GraphInputError(
                    f"positions shape {p.shape} does not match ({self.n}, 2)"
                )
            object.__setattr__(self, "positions", _readonly(p))

    def neighbors(self, i: NodeId) -> list[NodeId]:
        _check_node(self, i)
        return [j for j in range(self.n) if self.weights[i, j] > 0.0]

    def edges(self) -> list[tuple[NodeId, NodeId, float]]:
        """Every undirected edge once, as (i, j, w) with i < j, in index order."""
        out = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                w = self.weights[i, j]
                if w > 0.0:
                    out.append((i, j, float(w)))
        return out


@dataclass(frozen=True)
class PerturbationConfig:
    """Scale factor applied to every edge incident to the probed node."""

    epsilon: float

    def __post_init__(self) -> None:
        if not self.epsilon > 0.0:
            raise GraphInputError(f"epsilon must be positive, got {self.epsilon}")


@dataclass(frozen=True)
class ProximityModel:
    """Disk model: nodes within ``radius`` get weight exp(-d^2 / (2 sigma)).

    The boundary is inclusive: a pair at distance exactly ``radius`` is
    connected.
    """

    radius: float
    sigma: float

    def __post_init__(self) -> None:
        if not self.radius > 0.0:
            raise GraphInputError(f"radius must be positive, got {self.radius}")
        if not self.sigma > 0.0:
            raise GraphInputError(f"sigma must be positive, got {self.sigma}")


def _check_node(g: WeightedGraph, i: NodeId) -> None:
    if not 0 <= i < g.n:
        raise GraphInputError(f"node {i} out of range [0, {g.n})")


def from_edge_list(
    n: int, edges: list[tuple[NodeId, NodeId, float]]
) -> WeightedGraph:
    """Build a graph from (i, j, w) triples; both orientations get weight w.

    Self loops and duplicate edges are rejected rather than merged so that
    input mistakes surface immediately.
    """
    if n < 1:
        raise GraphInputError(f"node count must be >= 1, got {n}")
    w = np.zeros((n, n))
    seen: set[tuple[int, int]] = set()
    for i, j, wt in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise GraphInputError(f"edge ({i}, {j}) out of range for n={n}")
        if i == j:
            raise GraphInputError(f"self loop ({i}, {i}) is not allowed")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise GraphInputError(f"duplicate edge ({i}, {j})")
        if not wt > 0.0:
            raise GraphInputError(
                f"edge ({i}, {j}) must have positive weight, got {wt}"
            )
        seen.add(key)
        w[i, j] = w[j, i] = wt
    return WeightedGraph(n=n, weights=w)


def proximity_graph(positions, model: ProximityModel) -> WeightedGraph:
    """Weight every pair within the disk radius by exp(-d^2 / (2 sigma))."""
    pts = np.array(positions, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 1:
        raise GraphInputError(f"positions must be an (n, 2) array, got {pts.shape}")
    n = pts.shape[0]
    w = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            dx = pts[i, 0] - pts[j, 0]
            dy = pts[i, 1] - pts[j, 1]
            if math.hypot(dx, dy) <= model.radius:
                w[i, j] = w[j, i] = math.exp(-(dx * dx + dy * dy) / (2.0 * model.sigma))
    return WeightedGraph(n=n, weights=w, positions=pts)


def laplacian(g: WeightedGraph) -> np.ndarray:
    """Degree matrix minus adjacency: symmetric PSD with zero row sums."""
    w = g.weights
    return np.diag(w.sum(axis=1)) - w


def neighbor_weight_vector(g: WeightedGraph, i: NodeId) -> np.ndarray:
    """Row i of the weight matrix with entry i removed, order preserved."""
    if g.n < 2:
        raise PreconditionError("neighbor weight vector needs n >= 2")
    _check_node(g, i)
    return np.delete(g.weights[i], i)


def reduced_graph(g: WeightedGraph, i: NodeId) -> WeightedGraph:
    """Remove node i and its incident edges; remaining indices shift down.

    Note the result is the graph induced on the remaining nodes, so its
    Laplacian differs from the principal submatrix of ``laplacian(g)``: the
    degree entries no longer count the edges into i.
    """
    if g.n < 2:
        raise PreconditionError("cannot remove a node from a single-node graph")
    _check_node(g, i)
    w = np.delete(np.delete(g.weights, i, axis=0), i, axis=1)
    pos = None if g.positions is None else np.delete(g.positions, i, axis=0)
    return WeightedGraph(n=g.n - 1, weights=w, positions=pos)


def perturbed_laplacian(
    g: WeightedGraph, i: NodeId, cfg: PerturbationConfig
) -> np.ndarray:
    """Laplacian of the graph with every edge at node i scaled by epsilon.

    For epsilon = 1 this is exactly ``laplacian(g)``.
    """
    if g.n < 2:
        raise PreconditionError("perturbed Laplacian needs n >= 2")
    _check_node(g, i)
    w = g.weights.copy()
    w[i, :] *= cfg.epsilon
    w[:, i] *= cfg.epsilon
    return np.diag(w.sum(axis=1)) - w


def intermediate_matrix(
    g: WeightedGraph, i: NodeId, cfg: PerturbationConfig
) -> np.ndarray:
    """Reduced Laplacian plus the scaled coupling term of node i.

    Returns ``L_reduced + eps * (diag(a) + outer(a, ones))`` where ``a`` is
    node i's weight vector to the remaining nodes. Its eigenvalues equal the
    nonzero eigenvalues of :func:`perturbed_laplacian`; the matrix itself is
    generally not symmetric because of the rank-one term.
    """
    if g.n < 2:
        raise PreconditionError("intermediate matrix needs n >= 2")
    _check_node(g, i)
    a = neighbor_weight_vector(g, i)
    lr = laplacian(reduced_graph(g, i))
    return lr + cfg.epsilon * (np.diag(a) + np.outer(a, np.ones(g.n - 1)))


def coupling_matrix(g: WeightedGraph, i: NodeId) -> np.ndarray:
    """The unscaled coupling term ``diag(a) + outer(a, ones)`` for node i."""
    a = neighbor_weight_vector(g, i)
    return np.diag(a) + np.outer(a, np.ones(g.n - 1))


def graph_to_dict(g: WeightedGraph) -> dict:
    """JSON-ready form: ``{"n", "edges", "positions"}`` with each edge once (i < j)."""
    return {
        "n": g.n,
        "edges": [[i, j, w] for i, j, w in g.edges()],
        "positions": None if g.positions is None else g.positions.tolist(),
    }


def graph_from_dict(d: dict) -> WeightedGraph:
    """Parse the JSON graph schema; raises :class:`GraphInputError` on bad shape."""
    if not isinstance(d, dict):
        raise GraphInputError("graph document must be a JSON object")
    for key in ("n", "edges"):
        if key not in d:
            raise GraphInputError(f"graph document is missing the '{key}' key")
    n = d["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphInputError(f"'n' must be an integer, got {n!r}")
    edges = d["edges"]
    if not isinstance(edges, list):
        raise GraphInputError("'edges' must be a list of [i, j, w] triples")
    triples = []
    for e in edges:
        if not isinstance(e, (list, tuple)) or len(e) != 3:
            raise GraphInputError(f"edge entry {e!r} is not an [i, j, w] triple")
        i, j, w = e
        if not isinstance(i, int) or not isinstance(j, int):
            raise GraphInputError(f"edge endpoints must be integers, got {e!r}")
        triples.append((i, j, float(w)))
    g = from_edge_list(n, triples)
    pos = d.get("positions")
    if pos is None:
        return g
    return WeightedGraph(n=n, weights=g.weights, positions=pos)
