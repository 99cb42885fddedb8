"""Numerical verification suite for the identities behind the certificate.

Each check builds the matrices for one (graph, node) case, runs the relevant
eigensolves, and reports the worst deviation from the claimed identity or
bound. A failing check carries a JSON-ready witness (full graph plus
parameters) so the exact case can be replayed.

The checks:

* :func:`check_intermediate_spectrum` - the intermediate matrix's eigenvalues
  equal the perturbed Laplacian's with the null one dropped.
* :func:`check_combination_realness` - every real linear combination of the
  reduced Laplacian and the intermediate matrix has a real spectrum.
* :func:`check_eigenvalue_gap_bound` - the rank-paired eigenvalue gap between
  the intermediate matrix and the reduced Laplacian is bounded by the
  Frobenius norm of their difference.
* :func:`check_rank_one_update_spectrum` - the spectrum of
  ``gamma * L_reduced + eta * a 1^T`` splits into gamma times the nonzero
  reduced spectrum, a preserved null cluster, and one eigenvalue at
  ``eta * sum(a)``.
* :func:`check_null_drift_derivative` - the finite-difference derivative of
  the eigenvalue that leaves zero, compared against two candidate closed
  forms (``sum(a)`` and ``(n - 1) * sum(a)``); which one matches is reported,
  not assumed.
* :func:`counterexample_search` - randomized hunt for unsound certificates
  under a chosen bound mode.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .bicon import (
    BoundMode,
    articulation_points_bruteforce,
    articulation_points_oracle,
    spectral_certificate,
)
from .errors import PreconditionError
from .graph_core import (
    NodeId,
    PerturbationConfig,
    ProximityModel,
    WeightedGraph,
    from_edge_list,
    graph_to_dict,
    intermediate_matrix,
    laplacian,
    neighbor_weight_vector,
    perturbed_laplacian,
    proximity_graph,
    reduced_graph,
)
from .spectral import (
    general_eigen,
    is_connected_bfs,
    is_connected_spectral,
    symmetric_eigen,
)

SPECTRUM_TOL_FACTOR = 1e-7
IMAG_TOL = 1e-8
REALNESS_TOL_FACTOR = 1e-7
GAP_TOL = 1e-9
RANK_ONE_TOL = 1e-7
DERIVATIVE_TOL = 1e-3
NULL_TOL = 1e-9
FD_STEP = 1e-5


@dataclass(frozen=True)
class CheckOutcome:
    """Result of one numerical check.

    ``passed`` is ``max_error <= `` the check's stated tolerance; ``witness``
    serializes the inputs of a failing case, ``details`` carries per-check
    diagnostics (measured quantities, reference values, tolerances).
    """

    name: str
    passed: bool
    max_error: float
    witness: dict | None = None
    details: dict | None = None


@dataclass(frozen=True)
class CombinationParams:
    """Coefficients for the mixed matrix ``alpha * L_reduced + beta * P``.

    ``gamma`` and ``eta`` are derived, never set independently.
    """

    alpha: float
    beta: float
    epsilon: float

    def __post_init__(self) -> None:
        if self.alpha == 0.0 and self.beta == 0.0:
            raise ValueError("alpha and beta must not both be zero")

    @property
    def gamma(self) -> float:
        return self.alpha + self.beta

    @property
    def eta(self) -> float:
        return self.beta * self.epsilon


def _require_connected(g: WeightedGraph) -> None:
    if not is_connected_bfs(g):
        raise PreconditionError("graph must be connected")


def _witness(g: WeightedGraph, i: NodeId, **params) -> dict:
    return {"graph": graph_to_dict(g), "node": i, **params}


def check_intermediate_spectrum(
    g: WeightedGraph, i: NodeId, eps: float, tol_factor: float = SPECTRUM_TOL_FACTOR
) -> CheckOutcome:
    """Eigenvalues of the intermediate matrix vs the perturbed Laplacian.

    Ascending real parts of the intermediate spectrum must match the
    perturbed Laplacian's eigenvalues with the smallest dropped, index by
    index; imaginary parts must vanish.
    """
    if g.n < 3:
        raise PreconditionError("spectrum comparison needs n >= 3")
    _require_connected(g)
    cfg = PerturbationConfig(eps)
    p_eigs = general_eigen(intermediate_matrix(g, i, cfg)).eigenvalues
    l_mat = perturbed_laplacian(g, i, cfg)
    l_eigs = symmetric_eigen(l_mat).eigenvalues
    real_err = float(np.max(np.abs(np.sort(p_eigs.real) - l_eigs[1:])))
    imag_err = float(np.max(np.abs(p_eigs.imag)))
    tol = tol_factor * max(1.0, float(np.linalg.norm(l_mat)))
    passed = real_err <= tol and imag_err <= IMAG_TOL
    return CheckOutcome(
        name="intermediate-spectrum-match",
        passed=passed,
        max_error=max(real_err, imag_err),
        witness=None if passed else _witness(g, i, epsilon=eps),
        details={"real_error": real_err, "imag_error": imag_err, "tolerance": tol},
    )


def check_combination_realness(
    g: WeightedGraph,
    i: NodeId,
    params: CombinationParams,
    tol_factor: float = REALNESS_TOL_FACTOR,
) -> CheckOutcome:
    """``alpha * L_reduced + beta * P`` must have a purely real spectrum."""
    _require_connected(g)
    cfg = PerturbationConfig(params.epsilon)
    lr = laplacian(reduced_graph(g, i))
    f = params.alpha * lr + params.beta * intermediate_matrix(g, i, cfg)
    eigs = general_eigen(f).eigenvalues
    err = float(np.max(np.abs(eigs.imag)))
    tol = tol_factor * max(1.0, float(np.linalg.norm(f)))
    passed = err <= tol
    return CheckOutcome(
        name="combination-realness",
        passed=passed,
        max_error=err,
        witness=None
        if passed
        else _witness(
            g, i, alpha=params.alpha, beta=params.beta, epsilon=params.epsilon
        ),
        details={"tolerance": tol},
    )


def check_eigenvalue_gap_bound(
    g: WeightedGraph, i: NodeId, eps: float, tol: float = GAP_TOL
) -> CheckOutcome:
    """Rank-paired eigenvalue gap vs Frobenius norm of the perturbation.

    Both spectra are sorted descending and compared position by position;
    the maximum absolute difference must not exceed the Frobenius norm of
    the matrix difference (plus ``tol`` of slack for roundoff).
    """
    _require_connected(g)
    cfg = PerturbationConfig(eps)
    a_mat = intermediate_matrix(g, i, cfg)
    b_mat = laplacian(reduced_graph(g, i))
    a_desc = np.sort(general_eigen(a_mat).eigenvalues.real)[::-1]
    b_desc = np.sort(symmetric_eigen(b_mat).eigenvalues)[::-1]
    gap = float(np.max(np.abs(a_desc - b_desc)))
    norm = float(np.linalg.norm(a_mat - b_mat))
    err = max(0.0, gap - norm)
    passed = err <= tol
    return CheckOutcome(
        name="eigenvalue-gap-bound",
        passed=passed,
        max_error=err,
        witness=None if passed else _witness(g, i, epsilon=eps),
        details={"gap": gap, "frobenius_norm": norm},
    )


def rank_one_update_matrix(
    g: WeightedGraph, i: NodeId, gamma: float, eta: float
) -> np.ndarray:
    """``gamma * L_reduced + eta * outer(a, ones)`` for node i."""
    a = neighbor_weight_vector(g, i)
    return gamma * laplacian(reduced_graph(g, i)) + eta * np.outer(
        a, np.ones(g.n - 1)
    )


def _null_multiplicity(g: WeightedGraph, i: NodeId, lr_eigs: np.ndarray) -> int:
    """Null multiplicity of the reduced Laplacian, cross-checked against BFS."""
    l_spec = int(np.sum(lr_eigs < NULL_TOL))
    rg = reduced_graph(g, i)
    seen: set[int] = set()
    components = 0
    for start in range(rg.n):
        if start in seen:
            continue
        components += 1
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in range(rg.n):
                if rg.weights[u, v] > 0.0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
    if l_spec != components:
        raise RuntimeError(
            f"null multiplicity {l_spec} disagrees with component count {components}"
        )
    return l_spec


def check_rank_one_update_spectrum(
    g: WeightedGraph,
    i: NodeId,
    gamma: float,
    eta: float,
    tol: float = RANK_ONE_TOL,
) -> CheckOutcome:
    """Spectrum of the rank-one updated reduced Laplacian.

    With l the null multiplicity of the reduced Laplacian, the expected
    multiset is gamma times its nonzero eigenvalues, a zero of multiplicity
    l - 1, and one eigenvalue at ``eta * sum(a)`` (positive whenever eta > 0,
    since a connected graph forces sum(a) > 0). Sorted real parts are
    compared against this multiset; imaginary parts must vanish.
    """
    _require_connected(g)
    if gamma == 0.0:
        raise PreconditionError("gamma must be nonzero")
    if g.n < 3:
        raise PreconditionError("rank-one spectrum check needs n >= 3")
    a = neighbor_weight_vector(g, i)
    lr_eigs = symmetric_eigen(laplacian(reduced_graph(g, i))).eigenvalues
    l_null = _null_multiplicity(g, i, lr_eigs)
    moving = eta * float(np.sum(a))
    expected = np.sort(
        np.concatenate([gamma * lr_eigs[l_null:], np.zeros(l_null - 1), [moving]])
    )
    q_eigs = general_eigen(rank_one_update_matrix(g, i, gamma, eta)).eigenvalues
    real_err = float(np.max(np.abs(np.sort(q_eigs.real) - expected)))
    imag_err = float(np.max(np.abs(q_eigs.imag)))
    err = max(real_err, imag_err)
    passed = err <= tol
    return CheckOutcome(
        name="rank-one-update-spectrum",
        passed=passed,
        max_error=err,
        witness=None if passed else _witness(g, i, gamma=gamma, eta=eta),
        details={
            "null_multiplicity": l_null,
            "moving_eigenvalue": moving,
            "real_error": real_err,
            "imag_error": imag_err,
        },
    )


def _match_moving_eigenvalue(
    actual: np.ndarray, stationary: np.ndarray
) -> tuple[float, list[float]]:
    """Split a spectrum into the stationary matches and the one leftover.

    Greedy nearest-value matching: for each expected stationary eigenvalue
    (largest magnitude first) remove the closest remaining actual value; the
    single value left over is the one that moved off the null cluster.
    Returns (moving value, matched stationary actual values in expected order).
    """
    pool = list(actual)
    matched = [0.0] * len(stationary)
    order = sorted(range(len(stationary)), key=lambda k: -abs(stationary[k]))
    for k in order:
        target = stationary[k]
        best = min(range(len(pool)), key=lambda idx: abs(pool[idx] - target))
        matched[k] = pool.pop(best)
    assert len(pool) == 1
    return pool[0], matched


def check_null_drift_derivative(
    g: WeightedGraph,
    i: NodeId,
    step: float = FD_STEP,
    tol: float = DERIVATIVE_TOL,
) -> CheckOutcome:
    """Finite-difference derivative of the eigenvalue that leaves zero.

    At eta = 0 the rank-one update (gamma = 1) has l null eigenvalues, where
    l is the reduced Laplacian's null multiplicity; for small eta, l - 1 stay
    put and one moves right. The mover is located at eta = +/- step by
    nearest-value matching against the stationary spectrum, and its central
    difference is compared against two candidate closed forms: ``sum(a)``
    (the trace of the rank-one term) and ``(n - 1) * sum(a)``. Which one the
    measurement matches is reported in ``details``; the check passes when one
    of them does and every stationary null eigenvalue drifts less than
    ``tol``.
    """
    _require_connected(g)
    if g.n < 3:
        raise PreconditionError("null-drift check needs n >= 3")
    a = neighbor_weight_vector(g, i)
    lr_eigs = symmetric_eigen(laplacian(reduced_graph(g, i))).eigenvalues
    l_null = _null_multiplicity(g, i, lr_eigs)
    stationary = np.concatenate([np.zeros(l_null - 1), lr_eigs[l_null:]])

    def eigs_at(eta: float) -> np.ndarray:
        return general_eigen(rank_one_update_matrix(g, i, 1.0, eta)).eigenvalues.real

    mover_plus, matched_plus = _match_moving_eigenvalue(eigs_at(step), stationary)
    mover_minus, matched_minus = _match_moving_eigenvalue(eigs_at(-step), stationary)
    derivative = (mover_plus - mover_minus) / (2.0 * step)
    null_drift = 0.0
    for k in range(l_null - 1):
        null_drift = max(
            null_drift, abs((matched_plus[k] - matched_minus[k]) / (2.0 * step))
        )
    trace_candidate = float(np.sum(a))
    scaled_candidate = (g.n - 1) * trace_candidate
    err_trace = abs(derivative - trace_candidate) / max(1e-300, abs(trace_candidate))
    err_scaled = abs(derivative - scaled_candidate) / max(
        1e-300, abs(scaled_candidate)
    )
    matched = "none"
    if err_trace <= tol:
        matched = "trace"
    elif err_scaled <= tol:
        matched = "scaled"
    err = max(min(err_trace, err_scaled), null_drift)
    passed = err <= tol
    return CheckOutcome(
        name="null-drift-derivative",
        passed=passed,
        max_error=err,
        witness=None if passed else _witness(g, i, step=step),
        details={
            "fd_derivative": derivative,
            "trace_candidate": trace_candidate,
            "scaled_candidate": scaled_candidate,
            "matched_candidate": matched,
            "null_drift": null_drift,
        },
    )


# ---------------------------------------------------------------------------
# Random corpora


def random_connected_graph(
    rng: np.random.Generator, n: int, style: str = "er"
) -> WeightedGraph:
    """Random connected graph on n nodes with weights in (0, 1].

    ``style="er"`` samples uniform edge probability graphs and rejects
    disconnected draws; ``style="geometric"`` samples disk-model layouts in
    the unit square. Both fall back to a random-tree backbone with extra
    edges if rejection sampling runs out of attempts, so the function always
    returns a connected graph.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 1:
        return WeightedGraph(n=1, weights=np.zeros((1, 1)))
    if style == "geometric":
        for _ in range(40):
            pts = rng.random((n, 2))
            radius = float(rng.uniform(0.35, 0.8))
            g = proximity_graph(pts, ProximityModel(radius=radius, sigma=radius**2 / 2.0))
            if is_connected_bfs(g):
                return g
    elif style == "er":
        p = float(rng.uniform(0.15, 0.9))
        for _ in range(40):
            w = np.zeros((n, n))
            for i in range(n):
                for j in range(i + 1, n):
                    if rng.random() < p:
                        w[i, j] = w[j, i] = 1.0 - rng.random()
            g = WeightedGraph(n=n, weights=w)
            if is_connected_bfs(g):
                return g
    else:
        raise ValueError(f"unknown style {style!r}")
    # Fallback: random tree backbone plus extra edges, connected by construction.
    w = np.zeros((n, n))
    for k in range(1, n):
        j = int(rng.integers(0, k))
        w[k, j] = w[j, k] = 1.0 - rng.random()
    p = float(rng.uniform(0.05, 0.4))
    for i in range(n):
        for j in range(i + 1, n):
            if w[i, j] == 0.0 and rng.random() < p:
                w[i, j] = w[j, i] = 1.0 - rng.random()
    return WeightedGraph(n=n, weights=w)


def random_graph(rng: np.random.Generator, n: int, p: float) -> WeightedGraph:
    """Uniform edge-probability graph, possibly disconnected, weights in (0, 1]."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    w = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                w[i, j] = w[j, i] = 1.0 - rng.random()
    return WeightedGraph(n=n, weights=w)


def seed_graphs() -> list[WeightedGraph]:
    """Small structured graphs every random corpus starts with.

    The unit path on three nodes is the known case where the simplified
    bound certifies an articulation point; the bowtie (two triangles glued
    at a vertex) is the textbook cut vertex; the star and cycle cover the
    locally-degenerate and everywhere-biconnected extremes.
    """
    path3 = from_edge_list(3, [(0, 1, 1.0), (1, 2, 1.0)])
    bowtie = from_edge_list(
        5,
        [(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0), (2, 3, 1.0), (3, 4, 1.0), (4, 2, 1.0)],
    )
    star4 = from_edge_list(4, [(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)])
    cycle5 = from_edge_list(
        5, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 4, 1.0), (4, 0, 1.0)]
    )
    return [path3, bowtie, star4, cycle5]


def counterexample_search(
    trials: int, mode: BoundMode, seed: int
) -> list[dict]:
    """Hunt for unsound certificates: certified nodes the oracle calls cut vertices.

    The corpus starts with :func:`seed_graphs` and continues with random
    connected graphs; each trial draws one epsilon from {1e-3, 1e-2, 1e-1}
    and certifies every node. Deterministic for a fixed seed. Returns one
    witness dict per violation.
    """
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    rng = np.random.default_rng(seed)
    eps_choices = (1e-3, 1e-2, 1e-1)
    seeds = seed_graphs()
    witnesses: list[dict] = []
    for t in range(trials):
        if t < len(seeds):
            g = seeds[t]
        else:
            style = "geometric" if t % 3 == 2 else "er"
            g = random_connected_graph(rng, int(rng.integers(3, 13)), style=style)
        eps = float(rng.choice(eps_choices))
        cfg = PerturbationConfig(eps)
        points = articulation_points_oracle(g)
        for i in range(g.n):
            cert = spectral_certificate(g, i, cfg, mode)
            if cert.certified and i in points:
                bound = (
                    cert.simplified_bound
                    if mode is BoundMode.SIMPLIFIED
                    else cert.exact_norm_bound
                )
                witnesses.append(
                    _witness(
                        g,
                        i,
                        trial=t,
                        epsilon=eps,
                        mode=mode.value,
                        lambda3=cert.lambda3_perturbed,
                        bound=bound,
                    )
                )
    return witnesses


# ---------------------------------------------------------------------------
# Aggregated suite

# Checks whose outcome is reported but never gates the suite: the derivative
# check's job is to report which closed form the measurement matches, and the
# simplified-bound search is *expected* to find witnesses.
INFORMATIONAL_CHECKS = frozenset(
    {"null-drift-derivative", "certificate-search-simplified"}
)

_SUITE_EPS = (1e-3, 1e-2, 0.1, 1.0)
_SUITE_GAMMAS = (0.5, 1.0, 2.0)
_SUITE_ETA = 1e-3


def _aggregate(name: str, cases: list[CheckOutcome]) -> CheckOutcome:
    if not cases:
        return CheckOutcome(name=name, passed=True, max_error=0.0, details={"cases": 0})
    worst = max(cases, key=lambda c: c.max_error)
    failed = [c for c in cases if not c.passed]
    details = dict(worst.details or {})
    details["cases"] = len(cases)
    details["failures"] = len(failed)
    return CheckOutcome(
        name=name,
        passed=not failed,
        max_error=worst.max_error,
        witness=failed[0].witness if failed else None,
        details=details,
    )


def suite_corpus(rng: np.random.Generator, n_graphs: int, n_range=(3, 17)) -> list[WeightedGraph]:
    """Seed graphs followed by alternating random styles; deterministic per rng."""
    graphs = list(seed_graphs())
    for t in range(max(0, n_graphs - len(graphs))):
        style = "geometric" if t % 2 else "er"
        n = int(rng.integers(n_range[0], n_range[1]))
        graphs.append(random_connected_graph(rng, n, style=style))
    return graphs[:n_graphs]


def run_suite(
    seed: int,
    n_graphs: int = 60,
    trials: int = 200,
    draws: int = 5,
    tolerances: dict[str, float] | None = None,
) -> list[CheckOutcome]:
    """Run every check over a seeded random corpus and aggregate per check.

    Returns one outcome per check name; a suite passes when every outcome
    outside :data:`INFORMATIONAL_CHECKS` passed. ``tolerances`` may override
    individual check tolerances by name (``spectrum``, ``realness``, ``gap``,
    ``rank_one``, ``derivative``, ``connectivity``).
    """
    tol = {
        "spectrum": SPECTRUM_TOL_FACTOR,
        "realness": REALNESS_TOL_FACTOR,
        "gap": GAP_TOL,
        "rank_one": RANK_ONE_TOL,
        "derivative": DERIVATIVE_TOL,
        "connectivity": 1e-9,
    }
    tol.update(tolerances or {})
    rng = np.random.default_rng(seed)
    graphs = suite_corpus(rng, n_graphs)

    spectrum_cases: list[CheckOutcome] = []
    realness_cases: list[CheckOutcome] = []
    gap_cases: list[CheckOutcome] = []
    rank_one_cases: list[CheckOutcome] = []
    drift_cases: list[CheckOutcome] = []
    ortho_cases: list[CheckOutcome] = []
    oracle_cases: list[CheckOutcome] = []

    for g in graphs:
        ab = rng.uniform(-2.0, 2.0, size=(draws, 2))
        for i in range(g.n):
            for eps in _SUITE_EPS:
                spectrum_cases.append(
                    check_intermediate_spectrum(g, i, eps, tol_factor=tol["spectrum"])
                )
                gap_cases.append(
                    check_eigenvalue_gap_bound(g, i, eps, tol=tol["gap"])
                )
            for alpha, beta in ab:
                if alpha == 0.0 and beta == 0.0:
                    continue
                realness_cases.append(
                    check_combination_realness(
                        g,
                        i,
                        CombinationParams(float(alpha), float(beta), 0.1),
                        tol_factor=tol["realness"],
                    )
                )
            for gamma in _SUITE_GAMMAS:
                rank_one_cases.append(
                    check_rank_one_update_spectrum(
                        g, i, gamma, _SUITE_ETA, tol=tol["rank_one"]
                    )
                )
            drift_cases.append(
                check_null_drift_derivative(g, i, tol=tol["derivative"])
            )

        # Laplacian eigenvectors above the null space must be orthogonal to ones.
        spec = symmetric_eigen(laplacian(g), want_vectors=True)
        nonnull = spec.eigenvalues > NULL_TOL
        ortho = (
            float(np.max(np.abs(np.ones(g.n) @ spec.eigenvectors[:, nonnull])))
            if np.any(nonnull)
            else 0.0
        )
        ortho_cases.append(
            CheckOutcome(
                name="laplacian-eigenvector-orthogonality",
                passed=ortho <= 1e-8,
                max_error=ortho,
                witness=None if ortho <= 1e-8 else _witness(g, 0),
            )
        )
        agree = articulation_points_oracle(g) == articulation_points_bruteforce(g)
        oracle_cases.append(
            CheckOutcome(
                name="articulation-oracle-agreement",
                passed=agree,
                max_error=0.0 if agree else 1.0,
                witness=None if agree else _witness(g, 0),
            )
        )

    connectivity_cases: list[CheckOutcome] = []
    for _ in range(max(1, 4 * n_graphs)):
        n = int(rng.integers(2, 24))
        g = random_graph(rng, n, float(rng.uniform(0.0, 0.6)))
        agree = is_connected_spectral(g, tol["connectivity"]) == is_connected_bfs(g)
        connectivity_cases.append(
            CheckOutcome(
                name="connectivity-oracle-agreement",
                passed=agree,
                max_error=0.0 if agree else 1.0,
                witness=None if agree else _witness(g, 0),
            )
        )

    outcomes = [
        _aggregate("intermediate-spectrum-match", spectrum_cases),
        _aggregate("combination-realness", realness_cases),
        _aggregate("eigenvalue-gap-bound", gap_cases),
        _aggregate("rank-one-update-spectrum", rank_one_cases),
        _aggregate("laplacian-eigenvector-orthogonality", ortho_cases),
        _aggregate("articulation-oracle-agreement", oracle_cases),
        _aggregate("connectivity-oracle-agreement", connectivity_cases),
    ]

    drift = _aggregate("null-drift-derivative", drift_cases)
    matches = {"trace": 0, "scaled": 0, "none": 0}
    for c in drift_cases:
        matches[c.details["matched_candidate"]] += 1
    drift_details = dict(drift.details or {})
    drift_details["candidate_matches"] = matches
    outcomes.append(
        CheckOutcome(
            name=drift.name,
            passed=drift.passed,
            max_error=drift.max_error,
            witness=drift.witness,
            details=drift_details,
        )
    )

    exact_witnesses = counterexample_search(trials, BoundMode.EXACT_NORM, seed + 1)
    outcomes.append(
        CheckOutcome(
            name="certificate-search-exact",
            passed=not exact_witnesses,
            max_error=float(len(exact_witnesses)),
            witness=exact_witnesses[0] if exact_witnesses else None,
            details={"trials": trials, "witnesses": len(exact_witnesses)},
        )
    )
    simplified_witnesses = counterexample_search(
        trials, BoundMode.SIMPLIFIED, seed + 2
    )
    outcomes.append(
        CheckOutcome(
            name="certificate-search-simplified",
            passed=True,
            max_error=0.0,
            witness=simplified_witnesses[0] if simplified_witnesses else None,
            details={
                "trials": trials,
                "witnesses": len(simplified_witnesses),
                "expected_nonempty": True,
            },
        )
    )
    return outcomes


def suite_passed(outcomes: list[CheckOutcome]) -> bool:
    """True when every gating (non-informational) check passed."""
    return all(o.passed for o in outcomes if o.name not in INFORMATIONAL_CHECKS)


def outcome_to_dict(o: CheckOutcome) -> dict:
    return {
        "name": o.name,
        "passed": o.passed,
        "max_error": o.max_error,
        "witness": o.witness,
        "details": o.details,
    }
