"""Articulation-point certificates and exact combinatorial oracles.

The spectral certificate probes a node by scaling its incident edge weights
by a factor epsilon and comparing the third smallest eigenvalue of the
resulting Laplacian against an eigenvalue-gap bound. If the eigenvalue clears
the bound, removing the node cannot disconnect the graph: the certificate is
*sufficient only*, a node can fail it and still be harmless.

Two bound variants exist:

* ``EXACT_NORM``: epsilon times the Frobenius norm of the actual coupling
  matrix ``diag(a) + a 1^T``, which is the quantity the gap inequality
  bounds. This mode is sound and is the default.
* ``SIMPLIFIED``: ``epsilon * sqrt(n) * sqrt(sum a_k^2)``, a closed form that
  treats the coupling matrix as if its rows were constant. It evaluates below
  the true Frobenius norm ``sqrt((n + 2) * sum a_k^2)``, so it can certify a
  node that *is* an articulation point (the unit-weight path on three nodes
  is the standard counterexample). It is kept for comparison and for the
  counterexample search in :mod:`biconcert.verify`.

The combinatorial oracles (DFS low-link articulation points, brute-force
remove-and-check, vertex-capacity max flow for internally disjoint paths)
are exact: an edge exists iff its weight is strictly positive.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from .errors import PreconditionError
from .graph_core import (
    NodeId,
    PerturbationConfig,
    WeightedGraph,
    coupling_matrix,
    neighbor_weight_vector,
    perturbed_laplacian,
    reduced_graph,
)
from .spectral import is_connected_bfs, symmetric_eigen

# Strictness guard: the certificate requires lambda3 > bound + this margin,
# so ties produced by roundoff never certify.
CERTIFY_MARGIN = 1e-12


class BoundMode(Enum):
    """Which right-hand side the certificate compares lambda3 against."""

    SIMPLIFIED = "simplified"
    EXACT_NORM = "exact"


@dataclass(frozen=True)
class NodeCertificate:
    """Per-node record of the local test and the spectral certificate.

    The spectral fields are ``None`` when the node passed the local
    biconnectedness shortcut and the eigenvalue check was skipped.
    """

    node: NodeId
    locally_biconnected: bool
    lambda3_perturbed: float | None
    simplified_bound: float | None
    exact_norm_bound: float | None
    certified: bool
    oracle_is_articulation: bool | None = None


@dataclass(frozen=True)
class BiconnectivityReport:
    """Graph-level verdict: every node locally biconnected or certified."""

    nodes: tuple[NodeCertificate, ...]
    graph_certified: bool
    epsilon: float
    mode: BoundMode
    oracle_biconnected: bool | None = None


def simplified_bound(eps: float, n: int, a: np.ndarray) -> float:
    """Closed-form threshold ``eps * sqrt(n) * sqrt(sum a_k^2)``."""
    a = np.asarray(a, dtype=float)
    return float(eps * np.sqrt(n) * np.sqrt(np.sum(a * a)))


def exact_norm_bound(eps: float, a: np.ndarray) -> float:
    """Frobenius norm of the actual coupling matrix, scaled by epsilon."""
    a = np.asarray(a, dtype=float)
    m = np.diag(a) + np.outer(a, np.ones(a.shape[0]))
    return eps * float(np.linalg.norm(m))


def _require_connected(g: WeightedGraph) -> None:
    if not is_connected_bfs(g):
        raise PreconditionError("graph must be connected")


def _locally_biconnected(g: WeightedGraph, i: NodeId) -> bool:
    nbrs = g.neighbors(i)
    if len(nbrs) == 1:
        return True
    # The closed neighborhood {i} + N_i is a block iff the subgraph induced
    # on N_i alone is connected: i is adjacent to all of N_i, so i is the
    # only removal that can split it.
    seen = {nbrs[0]}
    queue = deque([nbrs[0]])
    nbr_set = set(nbrs)
    while queue:
        u = queue.popleft()
        for v in nbrs:
            if v not in seen and g.weights[u, v] > 0.0:
                seen.add(v)
                queue.append(v)
    return seen == nbr_set


def locally_biconnected(g: WeightedGraph, i: NodeId) -> bool:
    """True when node i's neighborhood subgraph guarantees it is not a cut vertex.

    Decided by connectivity of the subgraph induced on the open neighborhood
    N_i (a single neighbor counts as connected). Only 1-hop information about
    the weights among i's neighbors is consulted.
    """
    if g.n < 2:
        raise PreconditionError("local biconnectedness needs n >= 2")
    _require_connected(g)
    return _locally_biconnected(g, i)


def _certificate(
    g: WeightedGraph,
    i: NodeId,
    cfg: PerturbationConfig,
    mode: BoundMode,
    local: bool,
    skip_spectral: bool = False,
) -> NodeCertificate:
    if skip_spectral:
        return NodeCertificate(
            node=i,
            locally_biconnected=local,
            lambda3_perturbed=None,
            simplified_bound=None,
            exact_norm_bound=None,
            certified=False,
        )
    a = neighbor_weight_vector(g, i)
    lam3 = float(symmetric_eigen(perturbed_laplacian(g, i, cfg)).eigenvalues[2])
    simple = simplified_bound(cfg.epsilon, g.n, a)
    exact = exact_norm_bound(cfg.epsilon, a)
    bound = simple if mode is BoundMode.SIMPLIFIED else exact
    return NodeCertificate(
        node=i,
        locally_biconnected=local,
        lambda3_perturbed=lam3,
        simplified_bound=simple,
        exact_norm_bound=exact,
        certified=lam3 > bound + CERTIFY_MARGIN,
    )


def spectral_certificate(
    g: WeightedGraph,
    i: NodeId,
    cfg: PerturbationConfig,
    mode: BoundMode = BoundMode.EXACT_NORM,
) -> NodeCertificate:
    """Certify that node i is not an articulation point, via eigenvalues only.

    Computes lambda3 of the perturbed Laplacian and both bound variants;
    ``certified`` is true iff lambda3 strictly exceeds the selected bound.
    """
    if g.n <= 2:
        raise PreconditionError("the spectral certificate needs n > 2")
    _require_connected(g)
    return _certificate(g, i, cfg, mode, _locally_biconnected(g, i))


def certify_graph(
    g: WeightedGraph,
    cfg: PerturbationConfig,
    mode: BoundMode = BoundMode.EXACT_NORM,
    with_oracle: bool = False,
) -> BiconnectivityReport:
    """Run the full per-node workflow and aggregate the graph verdict.

    Nodes that pass the local biconnectedness shortcut skip the eigenvalue
    check entirely; the graph is certified when every node is either locally
    biconnected or spectrally certified. ``with_oracle`` annotates each node
    with the exact articulation oracle for validation output.
    """
    if g.n <= 2:
        raise PreconditionError("graph certification needs n > 2")
    _require_connected(g)
    certs = []
    for i in range(g.n):
        local = _locally_biconnected(g, i)
        certs.append(_certificate(g, i, cfg, mode, local, skip_spectral=local))
    if with_oracle:
        points = articulation_points_oracle(g)
        certs = [replace(c, oracle_is_articulation=c.node in points) for c in certs]
        oracle_flag = len(points) == 0 and g.n >= 3
    else:
        oracle_flag = None
    return BiconnectivityReport(
        nodes=tuple(certs),
        graph_certified=all(c.locally_biconnected or c.certified for c in certs),
        epsilon=cfg.epsilon,
        mode=mode,
        oracle_biconnected=oracle_flag,
    )


def articulation_points_oracle(g: WeightedGraph) -> set[NodeId]:
    """Exact cut vertices via a single DFS low-link pass."""
    _require_connected(g)
    n = g.n
    if n <= 2:
        return set()
    adj = [g.neighbors(i) for i in range(n)]
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    points: set[NodeId] = set()
    disc[0] = low[0] = 0
    timer = 1
    root_children = 0
    stack = [0]
    iters = [iter(adj[0])]
    while stack:
        u = stack[-1]
        pushed = False
        for v in iters[-1]:
            if disc[v] == -1:
                parent[v] = u
                disc[v] = low[v] = timer
                timer += 1
                if u == 0:
                    root_children += 1
                stack.append(v)
                iters.append(iter(adj[v]))
                pushed = True
                break
            if v != parent[u]:
                low[u] = min(low[u], disc[v])
        if not pushed:
            stack.pop()
            iters.pop()
            if stack:
                p = stack[-1]
                low[p] = min(low[p], low[u])
                if p != 0 and low[u] >= disc[p]:
                    points.add(p)
    if root_children > 1:
        points.add(0)
    return points


def articulation_points_bruteforce(g: WeightedGraph) -> set[NodeId]:
    """Independent cross-check: remove each node and test connectivity."""
    _require_connected(g)
    if g.n < 2:
        return set()
    return {i for i in range(g.n) if not is_connected_bfs(reduced_graph(g, i))}


def is_biconnected_oracle(g: WeightedGraph) -> bool:
    """No articulation point; a bare edge (n = 2) does not count as biconnected."""
    _require_connected(g)
    if g.n < 3:
        return False
    return not articulation_points_oracle(g)


def doubly_connected_oracle(g: WeightedGraph, i: NodeId, j: NodeId) -> bool:
    """Two internally vertex-disjoint i-j paths, decided by unit-capacity max flow.

    Every node other than the endpoints is split into an in/out pair joined
    by a unit arc, so no interior node can be reused; each undirected edge
    becomes a unit arc in both directions (the direct i-j edge, if present,
    is one such arc and counts as one path). Flow value >= 2 from i to j is
    then exactly the existence of two internally disjoint paths.
    """
    if i == j:
        raise PreconditionError("doubly-connected test needs two distinct nodes")
    if not (0 <= i < g.n and 0 <= j < g.n):
        raise PreconditionError(f"nodes ({i}, {j}) out of range [0, {g.n})")
    _require_connected(g)
    # node 2k = entry copy, 2k + 1 = exit copy
    cap: dict[tuple[int, int], int] = {}
    adj: dict[int, list[int]] = {}

    def add_arc(u: int, v: int) -> None:
        if (u, v) not in cap:
            cap[(u, v)] = 0
            cap[(v, u)] = cap.get((v, u), 0)
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        cap[(u, v)] += 1

    for k in range(g.n):
        if k != i and k != j:
            add_arc(2 * k, 2 * k + 1)
    for u, v, _w in g.edges():
        add_arc(2 * u + 1, 2 * v)
        add_arc(2 * v + 1, 2 * u)
    source, sink = 2 * i + 1, 2 * j
    flow = 0
    while flow < 2:
        pred: dict[int, int | None] = {source: None}
        queue = deque([source])
        while queue and sink not in pred:
            u = queue.popleft()
            for v in adj.get(u, ()):
                if v not in pred and cap.get((u, v), 0) > 0:
                    pred[v] = u
                    queue.append(v)
        if sink not in pred:
            break
        v = sink
        while pred[v] is not None:
            u = pred[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u
        flow += 1
    return flow >= 2


CSV_COLUMNS = [
    "node",
    "locally_biconnected",
    "lambda3",
    "simplified_bound",
    "exact_bound",
    "certified",
    "oracle",
]


def report_to_dict(r: BiconnectivityReport) -> dict:
    """JSON-ready report; floats keep full round-trip precision."""
    return {
        "epsilon": r.epsilon,
        "mode": r.mode.value,
        "graph_certified": r.graph_certified,
        "oracle_biconnected": r.oracle_biconnected,
        "nodes": [
            {
                "node": c.node,
                "locally_biconnected": c.locally_biconnected,
                "lambda3": c.lambda3_perturbed,
                "simplified_bound": c.simplified_bound,
                "exact_norm_bound": c.exact_norm_bound,
                "certified": c.certified,
                "oracle_is_articulation": c.oracle_is_articulation,
            }
            for c in r.nodes
        ],
    }


def _csv_num(x: float | None) -> str:
    return "" if x is None else format(x, ".6g")


def _csv_flag(x: bool | None) -> str:
    return "" if x is None else ("true" if x else "false")


def report_csv_rows(r: BiconnectivityReport) -> list[list[str]]:
    """Header plus one row per node; floats at 6 significant digits."""
    rows = [list(CSV_COLUMNS)]
    for c in r.nodes:
        rows.append(
            [
                str(c.node),
                _csv_flag(c.locally_biconnected),
                _csv_num(c.lambda3_perturbed),
                _csv_num(c.simplified_bound),
                _csv_num(c.exact_norm_bound),
                _csv_flag(c.certified),
                _csv_flag(c.oracle_is_articulation),
            ]
        )
    return rows
