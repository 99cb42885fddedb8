"""Command line front end.

Subcommands: ``gen`` (random disk-model graph), ``check`` (per-node
certificates plus graph verdict), ``oracle`` (exact articulation points),
``sweep`` (certificate quantities over an epsilon grid), ``export``
(Graphviz DOT), and ``verify`` (the numerical check suite).

Exit codes: 0 success or certified, 2 not certified, 3 precondition failure
(disconnected input, impossible generation), 4 malformed input or usage.
Identical invocations (including ``--seed``) produce byte-identical output
files; randomness comes from numpy's seeded PCG64 generator, which is
recorded in generated file metadata.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .bicon import (
    BiconnectivityReport,
    BoundMode,
    articulation_points_oracle,
    certify_graph,
    exact_norm_bound,
    is_biconnected_oracle,
    locally_biconnected,
    report_csv_rows,
    report_to_dict,
    simplified_bound,
)
from .errors import GraphInputError, PreconditionError
from .graph_core import (
    PerturbationConfig,
    ProximityModel,
    WeightedGraph,
    graph_from_dict,
    graph_to_dict,
    neighbor_weight_vector,
    perturbed_laplacian,
    proximity_graph,
)
from .spectral import is_connected_bfs, symmetric_eigen
from .verify import (
    INFORMATIONAL_CHECKS,
    outcome_to_dict,
    run_suite,
    suite_passed,
)

EXIT_OK = 0
EXIT_NOT_CERTIFIED = 2
EXIT_PRECONDITION = 3
EXIT_INPUT = 4

GEN_MAX_ATTEMPTS = 500
RNG_NAME = "numpy-pcg64"
DEFAULT_EPS_GRID = "1e-4:1:13"

_TOL_NAMES = ("spectrum", "realness", "gap", "rank-one", "derivative", "connectivity")


@dataclass
class RunConfig:
    """Validated invocation: one command plus everything it needs."""

    command: str
    input_path: str | None = None
    output_path: str | None = None
    epsilon: float = 0.05
    mode: BoundMode = BoundMode.EXACT_NORM
    oracle: bool = False
    seed: int | None = None
    n: int | None = None
    radius: float = 0.5
    sigma: float = 0.125
    eps_grid: str = DEFAULT_EPS_GRID
    trials: int = 200
    graphs: int = 60
    tolerances: dict[str, float] = field(default_factory=dict)

    def validate(self) -> None:
        required = {
            "gen": ("seed", "n"),
            "verify": ("seed",),
            "check": ("input_path",),
            "oracle": ("input_path",),
            "sweep": ("input_path",),
            "export": ("input_path",),
        }
        for name in required[self.command]:
            if getattr(self, name) is None:
                flag = name.removesuffix("_path")
                raise GraphInputError(f"'{self.command}' requires --{flag}")
        if self.command == "gen" and self.n < 1:
            raise GraphInputError(f"--n must be >= 1, got {self.n}")
        if self.command == "verify" and self.trials < 1:
            raise GraphInputError(f"--trials must be >= 1, got {self.trials}")
        if self.command == "verify" and self.graphs < 1:
            raise GraphInputError(f"--graphs must be >= 1, got {self.graphs}")
        if self.epsilon is not None and not self.epsilon > 0.0:
            raise GraphInputError(f"--epsilon must be positive, got {self.epsilon}")


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors, which collides with the
    # not-certified exit code; surface them as input errors instead.
    def error(self, message: str) -> None:
        raise GraphInputError(message)


def parse_eps_grid(spec: str) -> list[float]:
    """Parse ``lo:hi:count`` (log spaced) or a comma list of explicit values."""
    spec = spec.strip()
    if not spec:
        raise GraphInputError("epsilon grid must not be empty")
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise GraphInputError(f"bad grid spec {spec!r}, expected lo:hi:count")
        try:
            lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as exc:
            raise GraphInputError(f"bad grid spec {spec!r}: {exc}") from exc
        if count < 1 or lo <= 0 or hi <= 0:
            raise GraphInputError(f"bad grid spec {spec!r}: need positive bounds and count >= 1")
        return [float(x) for x in np.geomspace(lo, hi, count)]
    try:
        values = [float(tok) for tok in spec.split(",") if tok.strip()]
    except ValueError as exc:
        raise GraphInputError(f"bad grid value in {spec!r}: {exc}") from exc
    if not values:
        raise GraphInputError("epsilon grid must not be empty")
    if any(v <= 0 for v in values):
        raise GraphInputError("epsilon grid values must be positive")
    return values


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _csv_text(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _load_graph(path: str) -> WeightedGraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"{path} is not valid JSON: {exc}") from exc
    return graph_from_dict(doc)


def _csv_sibling(path: str) -> str:
    return path[: -len(".json")] + ".csv" if path.endswith(".json") else path + ".csv"


def cmd_gen(cfg: RunConfig) -> int:
    """Random connected disk-model graph in the unit square."""
    if cfg.n >= 2 and cfg.radius <= 0.0:
        raise PreconditionError(
            f"radius {cfg.radius} cannot connect {cfg.n} nodes; increase --radius"
        )
    rng = np.random.default_rng(cfg.seed)
    meta = {
        "seed": cfg.seed,
        "rng": RNG_NAME,
        "radius": cfg.radius,
        "sigma": cfg.sigma,
    }
    if cfg.n == 1:
        doc = graph_to_dict(
            WeightedGraph(n=1, weights=np.zeros((1, 1)), positions=rng.random((1, 2)))
        )
        doc["meta"] = meta
        _write_text(cfg.output_path, _dump_json(doc))
        return EXIT_OK
    model = ProximityModel(radius=cfg.radius, sigma=cfg.sigma)
    for attempt in range(GEN_MAX_ATTEMPTS):
        g = proximity_graph(rng.random((cfg.n, 2)), model)
        if is_connected_bfs(g):
            doc = graph_to_dict(g)
            doc["meta"] = {**meta, "attempt": attempt}
            _write_text(cfg.output_path, _dump_json(doc))
            return EXIT_OK
    raise PreconditionError(
        f"no connected layout in {GEN_MAX_ATTEMPTS} attempts for n={cfg.n}, "
        f"radius={cfg.radius}; increase --radius or lower --n"
    )


def cmd_check(cfg: RunConfig) -> int:
    """Certify a graph file; writes the JSON report (and CSV next to it)."""
    g = _load_graph(cfg.input_path)
    report = certify_graph(
        g, PerturbationConfig(cfg.epsilon), cfg.mode, with_oracle=cfg.oracle
    )
    _emit_report(cfg, report)
    return EXIT_OK if report.graph_certified else EXIT_NOT_CERTIFIED


def _emit_report(cfg: RunConfig, report: BiconnectivityReport) -> None:
    json_text = _dump_json(report_to_dict(report))
    if cfg.output_path is None:
        sys.stdout.write(json_text)
    else:
        _write_text(cfg.output_path, json_text)
        _write_text(_csv_sibling(cfg.output_path), _csv_text(report_csv_rows(report)))


def cmd_oracle(cfg: RunConfig) -> int:
    """Exact combinatorial answers for a graph file."""
    g = _load_graph(cfg.input_path)
    points = sorted(articulation_points_oracle(g))
    doc = {
        "articulation_points": points,
        "biconnected": is_biconnected_oracle(g),
        "n": g.n,
    }
    _write_text(cfg.output_path, _dump_json(doc))
    return EXIT_OK


def cmd_sweep(cfg: RunConfig) -> int:
    """Certificate quantities for every node over an epsilon grid (CSV)."""
    grid = parse_eps_grid(cfg.eps_grid)
    g = _load_graph(cfg.input_path)
    if g.n <= 2:
        raise PreconditionError("sweep needs n > 2")
    if not is_connected_bfs(g):
        raise PreconditionError("graph must be connected")
    rows = [
        [
            "node",
            "epsilon",
            "lambda3",
            "simplified_bound",
            "exact_bound",
            "certified_simplified",
            "certified_exact",
        ]
    ]
    margin = 1e-12
    for i in range(g.n):
        a = neighbor_weight_vector(g, i)
        for eps in grid:
            lam3 = float(
                symmetric_eigen(
                    perturbed_laplacian(g, i, PerturbationConfig(eps))
                ).eigenvalues[2]
            )
            simple = simplified_bound(eps, g.n, a)
            exact = exact_norm_bound(eps, a)
            rows.append(
                [
                    str(i),
                    format(eps, ".6g"),
                    format(lam3, ".6g"),
                    format(simple, ".6g"),
                    format(exact, ".6g"),
                    "true" if lam3 > simple + margin else "false",
                    "true" if lam3 > exact + margin else "false",
                ]
            )
    _write_text(cfg.output_path, _csv_text(rows))
    return EXIT_OK


def cmd_export(cfg: RunConfig) -> int:
    """Graphviz DOT with oracle and local-biconnectedness marks.

    Marks need a connected graph; a disconnected one is exported bare.
    """
    g = _load_graph(cfg.input_path)
    points: set[int] = set()
    local: set[int] = set()
    if g.n >= 2 and is_connected_bfs(g):
        points = articulation_points_oracle(g)
        local = {i for i in range(g.n) if locally_biconnected(g, i)}
    lines = ["graph g {", "  node [shape=circle];"]
    for i in range(g.n):
        attrs = []
        if g.positions is not None:
            attrs.append(f'pos="{g.positions[i, 0]:.6g},{g.positions[i, 1]:.6g}!"')
        if i in points:
            attrs.append("articulation=true")
            attrs.append("color=red")
        if i in local:
            attrs.append("locally_biconnected=true")
            attrs.append("style=filled")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {i}{suffix};")
    for i, j, w in g.edges():
        lines.append(f'  {i} -- {j} [label="{w:.4g}"];')
    lines.append("}")
    _write_text(cfg.output_path, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    """Run the numerical check suite; informational checks never gate."""
    outcomes = run_suite(
        seed=cfg.seed,
        n_graphs=cfg.graphs,
        trials=cfg.trials,
        tolerances=cfg.tolerances,
    )
    width = max(len(o.name) for o in outcomes)
    lines = []
    for o in outcomes:
        tag = "INFO" if o.name in INFORMATIONAL_CHECKS else ("PASS" if o.passed else "FAIL")
        cases = (o.details or {}).get("cases", (o.details or {}).get("trials", ""))
        extra = ""
        if o.name == "null-drift-derivative":
            extra = f"  matches={ (o.details or {}).get('candidate_matches') }"
        if o.name.startswith("certificate-search"):
            extra = f"  witnesses={(o.details or {}).get('witnesses')}"
        lines.append(
            f"{o.name:<{width}}  {tag}  cases={cases}  max_error={o.max_error:.3e}{extra}"
        )
    sys.stdout.write("\n".join(lines) + "\n")
    if cfg.output_path is not None:
        _write_text(
            cfg.output_path, _dump_json([outcome_to_dict(o) for o in outcomes])
        )
    return EXIT_OK if suite_passed(outcomes) else EXIT_NOT_CERTIFIED


_COMMANDS = {
    "gen": cmd_gen,
    "check": cmd_check,
    "oracle": cmd_oracle,
    "sweep": cmd_sweep,
    "export": cmd_export,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="biconcert", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a random connected disk-model graph")
    gen.add_argument("--n", type=int, required=True, help="number of nodes")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--radius", type=float, default=0.5)
    gen.add_argument("--sigma", type=float, default=0.125)
    gen.add_argument("--output", dest="output_path")

    check = sub.add_parser("check", help="certify every node of a graph file")
    check.add_argument("--input", dest="input_path", required=True)
    check.add_argument("--output", dest="output_path")
    check.add_argument("--epsilon", type=float, default=0.05)
    check.add_argument(
        "--mode", choices=[m.value for m in BoundMode], default=BoundMode.EXACT_NORM.value
    )
    check.add_argument("--oracle", action="store_true", help="add exact-oracle columns")

    oracle = sub.add_parser("oracle", help="exact articulation points and verdict")
    oracle.add_argument("--input", dest="input_path", required=True)
    oracle.add_argument("--output", dest="output_path")

    sweep = sub.add_parser("sweep", help="certificate quantities over an epsilon grid")
    sweep.add_argument("--input", dest="input_path", required=True)
    sweep.add_argument("--output", dest="output_path")
    sweep.add_argument(
        "--eps-grid",
        dest="eps_grid",
        default=DEFAULT_EPS_GRID,
        help="lo:hi:count (log spaced) or comma-separated values",
    )

    export = sub.add_parser("export", help="Graphviz DOT with oracle marks")
    export.add_argument("--input", dest="input_path", required=True)
    export.add_argument("--output", dest="output_path")

    verify = sub.add_parser("verify", help="run the numerical check suite")
    verify.add_argument("--seed", type=int, required=True)
    verify.add_argument("--trials", type=int, default=200, help="counterexample search trials")
    verify.add_argument("--graphs", type=int, default=60, help="corpus size for the checks")
    verify.add_argument("--output", dest="output_path")
    for name in _TOL_NAMES:
        verify.add_argument(
            f"--tol-{name}", dest=f"tol_{name.replace('-', '_')}", type=float
        )
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for name in (
        "input_path",
        "output_path",
        "epsilon",
        "seed",
        "n",
        "radius",
        "sigma",
        "eps_grid",
        "trials",
        "graphs",
        "oracle",
    ):
        if hasattr(args, name) and getattr(args, name) is not None:
            setattr(cfg, name, getattr(args, name))
    if getattr(args, "mode", None) is not None:
        cfg.mode = BoundMode(args.mode)
    for name in _TOL_NAMES:
        value = getattr(args, f"tol_{name.replace('-', '_')}", None)
        if value is not None:
            cfg.tolerances[name.replace("-", "_")] = value
    cfg.validate()
    return cfg


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = config_from_args(args)
        return _COMMANDS[cfg.command](cfg)
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
