"""Command line interface.

Subcommands::

    percmoments bounds    --graph NAME --p P            closed-form bounds
    percmoments oracle    --graph NAME --p P            exact moments (small graphs)
    percmoments simulate  --graph NAME --p P            Monte Carlo estimate
    percmoments sweep     --graph NAME --p-grid A:B:C   bounds + estimates over a grid
    percmoments dominance --graph NAME --p P            birth vs branching tail table

Moment-producing subcommands share one fixed CSV schema (see
:data:`MOMENT_COLUMNS`); cells a subcommand does not produce are left empty.
``--format json`` emits the same rows as a JSON array with nulls instead of
empty cells.  Floats are written with ``repr`` so they round-trip exactly.

Exit codes: 0 on success, 1 on runtime failures, 2 on usage errors or
refused preconditions (bad parameters, invalid graphs, enumeration over the
edge cap).  The cap honors the ``PERCMOMENTS_ORACLE_CAP`` variable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import TextIO

from .bounds import BoundParams, MomentPair, best_bounds, branching_bounds, isolation_bounds
from .coupling import dominance_report
from .errors import BadParameterError, PercmomentsError, RetryLimitError
from .graphs import Graph, generate_builtin, load_edge_file
from .montecarlo import estimate_moments, sweep
from .oracle import exact_moments, moment_polynomial

__all__ = [
    "MOMENT_COLUMNS",
    "DOMINANCE_COLUMNS",
    "CommandRequest",
    "parse_args",
    "parse_p_grid",
    "execute",
    "main",
]

MOMENT_COLUMNS = [
    "graph",
    "N",
    "D",
    "p",
    "reps",
    "seed",
    "mean_s",
    "se_s",
    "mean_s2",
    "se_s2",
    "thm1_first",
    "thm1_second",
    "thm2_first",
    "thm2_second",
    "best_first",
    "best_second",
    "exact_first",
    "exact_second",
]

DOMINANCE_COLUMNS = [
    "graph",
    "N",
    "D",
    "p",
    "reps",
    "seed",
    "generation",
    "k",
    "birth_tail",
    "branching_tail",
    "birth_se",
    "branching_se",
    "within_tolerance",
]

_ENV_CAP = "PERCMOMENTS_ORACLE_CAP"


@dataclass(frozen=True)
class CommandRequest:
    """Parsed command line, ready for :func:`execute`."""

    subcommand: str
    graph_name: str | None = None
    edge_file: str | None = None
    p: float | None = None
    p_grid: tuple[float, ...] | None = None
    replicates: int = 100_000
    seed: int = 0
    workers: int = 1
    output_format: str = "csv"
    output_path: str | None = None
    include_oracle: bool = False
    dump_polynomial: bool = False


def parse_p_grid(text: str) -> tuple[float, ...]:
    """Parse ``start:end:step`` into an inclusive grid of probabilities.

    The final point is clamped to ``end`` so rounding of repeated step
    addition never drops or overshoots the endpoint.
    """
    parts = text.split(":")
    if len(parts) != 3:
        raise BadParameterError(f"p grid must look like start:end:step, got {text!r}")
    try:
        start, end, step = (float(s) for s in parts)
    except ValueError:
        raise BadParameterError(f"p grid has non-numeric parts: {text!r}") from None
    if step <= 0:
        raise BadParameterError(f"p grid step must be positive, got {step}")
    if not 0.0 <= start <= end <= 1.0:
        raise BadParameterError(
            f"p grid must satisfy 0 <= start <= end <= 1, got {start}..{end}"
        )
    points = []
    i = 0
    while True:
        value = start + i * step
        if value >= end - 1e-12:
            break
        points.append(value)
        i += 1
    points.append(end)
    return tuple(points)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="percmoments",
        description="Cluster-size moment bounds, oracles, and simulations "
        "for bond percolation on regular graphs.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(sp: argparse.ArgumentParser, with_p: bool = True) -> None:
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument(
            "--graph",
            help="builtin graph name: tetrahedron, cube, octahedron, "
            "dodecahedron, icosahedron, ring(N), complete(N), hypercube(D)",
        )
        src.add_argument("--edge-file", help="path to an edge-list file")
        if with_p:
            sp.add_argument("--p", type=float, required=True, help="edge probability")
        sp.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
        sp.add_argument(
            "--format", choices=("csv", "json"), default="csv", dest="output_format"
        )
        sp.add_argument("--output", help="write to this file instead of stdout")

    def add_reps(sp: argparse.ArgumentParser) -> None:
        sp.add_argument(
            "--reps", type=int, default=100_000, help="replicates (default 100000)"
        )
        sp.add_argument(
            "--workers", type=int, default=1, help="worker threads (default 1)"
        )

    sp = sub.add_parser("bounds", help="closed-form moment bounds at one p")
    add_common(sp)

    sp = sub.add_parser("oracle", help="exact moments by enumeration at one p")
    add_common(sp)
    sp.add_argument(
        "--polynomial",
        action="store_true",
        help="emit the exact moment polynomial as JSON instead of a row",
    )

    sp = sub.add_parser("simulate", help="Monte Carlo moment estimate at one p")
    add_common(sp)
    add_reps(sp)

    sp = sub.add_parser("sweep", help="bounds and estimates over a p grid")
    add_common(sp, with_p=False)
    sp.add_argument(
        "--p-grid", required=True, help="probability grid as start:end:step"
    )
    add_reps(sp)
    sp.add_argument(
        "--oracle",
        action="store_true",
        dest="include_oracle",
        help="also compute exact moments (graphs within the edge cap only)",
    )

    sp = sub.add_parser(
        "dominance", help="tail comparison of birth process vs branching envelope"
    )
    add_common(sp)
    add_reps(sp)

    return parser


def parse_args(argv: list[str] | None = None) -> CommandRequest:
    ns = _build_parser().parse_args(argv)
    return CommandRequest(
        subcommand=ns.subcommand,
        graph_name=ns.graph,
        edge_file=ns.edge_file,
        p=getattr(ns, "p", None),
        p_grid=parse_p_grid(ns.p_grid) if getattr(ns, "p_grid", None) else None,
        replicates=getattr(ns, "reps", 100_000),
        seed=ns.seed,
        workers=getattr(ns, "workers", 1),
        output_format=ns.output_format,
        output_path=ns.output,
        include_oracle=getattr(ns, "include_oracle", False),
        dump_polynomial=getattr(ns, "polynomial", False),
    )


def _resolve_graph(request: CommandRequest) -> Graph:
    if request.graph_name is not None:
        return generate_builtin(request.graph_name)
    assert request.edge_file is not None
    return load_edge_file(request.edge_file)


def _oracle_cap() -> int | None:
    raw = os.environ.get(_ENV_CAP)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise BadParameterError(f"{_ENV_CAP} must be an integer, got {raw!r}") from None


def _empty_row() -> dict:
    return {col: None for col in MOMENT_COLUMNS}


def _fill_graph(row: dict, graph: Graph) -> None:
    row["graph"] = graph.label
    row["N"] = graph.n_vertices
    row["D"] = graph.degree


def _fill_bounds(row: dict, graph: Graph, p: float) -> None:
    params = BoundParams(degree=graph.degree, n_vertices=graph.n_vertices, p=p)
    b, i, c = branching_bounds(params), isolation_bounds(params), best_bounds(params)
    row["thm1_first"], row["thm1_second"] = b.first, b.second
    row["thm2_first"], row["thm2_second"] = i.first, i.second
    row["best_first"], row["best_second"] = c.first, c.second


def _fill_exact(row: dict, pair: MomentPair) -> None:
    row["exact_first"], row["exact_second"] = pair.first, pair.second


def _moment_rows(request: CommandRequest, graph: Graph) -> list[dict]:
    rows: list[dict] = []
    if request.subcommand == "bounds":
        row = _empty_row()
        _fill_graph(row, graph)
        row["p"] = request.p
        _fill_bounds(row, graph, request.p)
        rows.append(row)
    elif request.subcommand == "oracle":
        row = _empty_row()
        _fill_graph(row, graph)
        row["p"] = request.p
        _fill_exact(row, exact_moments(graph, request.p, _oracle_cap()))
        rows.append(row)
    elif request.subcommand == "simulate":
        row = _empty_row()
        _fill_graph(row, graph)
        row["p"] = request.p
        row["reps"] = request.replicates
        row["seed"] = request.seed
        est = estimate_moments(
            graph, request.p, request.replicates, request.seed, request.workers
        )
        row["mean_s"], row["se_s"] = est.mean_s, est.se_s
        row["mean_s2"], row["se_s2"] = est.mean_s2, est.se_s2
        _fill_bounds(row, graph, request.p)
        rows.append(row)
    else:  # sweep
        result = sweep(
            graph,
            request.p_grid,
            request.replicates,
            request.seed,
            include_oracle=request.include_oracle,
            workers=request.workers,
            max_oracle_edges=_oracle_cap(),
        )
        for sweep_row in result.rows:
            row = _empty_row()
            _fill_graph(row, graph)
            row["p"] = sweep_row.p
            row["reps"] = request.replicates
            row["seed"] = sweep_row.estimate.seed
            est = sweep_row.estimate
            row["mean_s"], row["se_s"] = est.mean_s, est.se_s
            row["mean_s2"], row["se_s2"] = est.mean_s2, est.se_s2
            row["thm1_first"] = sweep_row.branching.first
            row["thm1_second"] = sweep_row.branching.second
            row["thm2_first"] = sweep_row.isolation.first
            row["thm2_second"] = sweep_row.isolation.second
            row["best_first"] = sweep_row.combined.first
            row["best_second"] = sweep_row.combined.second
            if sweep_row.exact is not None:
                _fill_exact(row, sweep_row.exact)
            rows.append(row)
    return rows


def _dominance_rows(request: CommandRequest, graph: Graph) -> list[dict]:
    report = dominance_report(graph, request.p, request.replicates, request.seed)
    rows = []
    for tail in report.rows:
        rows.append(
            {
                "graph": graph.label,
                "N": graph.n_vertices,
                "D": graph.degree,
                "p": request.p,
                "reps": request.replicates,
                "seed": request.seed,
                "generation": tail.generation,
                "k": tail.k,
                "birth_tail": tail.birth_tail,
                "branching_tail": tail.branching_tail,
                "birth_se": tail.birth_se,
                "branching_se": tail.branching_se,
                "within_tolerance": tail.within_tolerance,
            }
        )
    return rows


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write_rows(out: TextIO, rows: list[dict], columns: list[str], fmt: str) -> None:
    if fmt == "json":
        out.write(json.dumps(rows, indent=2))
        out.write("\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_format_cell(row[col]) for col in columns])


def execute(request: CommandRequest, out: TextIO | None = None) -> int:
    """Run one parsed command, writing rows to ``out`` (default stdout)."""
    stream = out if out is not None else sys.stdout
    try:
        graph = _resolve_graph(request)
        if request.subcommand == "oracle" and request.dump_polynomial:
            if request.output_format != "json":
                raise BadParameterError("--polynomial output is JSON only")
            poly = moment_polynomial(graph, _oracle_cap())
            payload = poly.to_json_dict()
            payload["graph"] = graph.label
            text = json.dumps(payload, indent=2) + "\n"
            _deliver(request, stream, text)
            return 0
        if request.subcommand == "dominance":
            rows, columns = _dominance_rows(request, graph), DOMINANCE_COLUMNS
        else:
            rows, columns = _moment_rows(request, graph), MOMENT_COLUMNS
    except PercmomentsError as exc:
        return _emit_error(request, stream, exc)
    except OSError as exc:
        print(f"percmoments: {exc}", file=sys.stderr)
        return 2

    buffer = io.StringIO()
    _write_rows(buffer, rows, columns, request.output_format)
    _deliver(request, stream, buffer.getvalue())
    return 0


def _deliver(request: CommandRequest, stream: TextIO, text: str) -> None:
    if request.output_path is not None:
        with open(request.output_path, "w", newline="") as fh:
            fh.write(text)
    else:
        stream.write(text)


def _emit_error(request: CommandRequest, stream: TextIO, exc: PercmomentsError) -> int:
    code = 1 if isinstance(exc, RetryLimitError) else 2
    print(f"percmoments: {exc}", file=sys.stderr)
    if request.output_format == "json":
        payload = {"error": exc.name, "message": str(exc)}
        _deliver(request, stream, json.dumps(payload, indent=2) + "\n")
    return code


def main(argv: list[str] | None = None) -> int:
    try:
        request = parse_args(argv)
    except BadParameterError as exc:
        print(f"percmoments: {exc}", file=sys.stderr)
        return 2
    return execute(request)


if __name__ == "__main__":
    sys.exit(main())
