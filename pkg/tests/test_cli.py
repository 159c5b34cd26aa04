import csv
import io
import json

import pytest

from percmoments import (
    estimate_moments,
    exact_moments,
    format_edge_file,
    moment_polynomial,
)
from percmoments.bounds import BoundParams, isolation_bounds
from percmoments.cli import (
    DOMINANCE_COLUMNS,
    MOMENT_COLUMNS,
    CommandRequest,
    execute,
    main,
    parse_args,
    parse_p_grid,
)
from percmoments.errors import BadParameterError


def run_cli(argv):
    buf = io.StringIO()
    code = execute(parse_args(argv), buf)
    return code, buf.getvalue()


def read_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


# ---------------------------------------------------------------- parsing


def test_parse_defaults():
    req = parse_args(["simulate", "--graph", "cube", "--p", "0.5"])
    assert req == CommandRequest(
        subcommand="simulate", graph_name="cube", p=0.5, replicates=100_000,
        seed=0, workers=1, output_format="csv",
    )


def test_parse_rejects_missing_and_conflicting_sources(tmp_path):
    with pytest.raises(SystemExit) as exc:
        parse_args(["bounds", "--p", "0.5"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        parse_args(["bounds", "--graph", "cube", "--edge-file", "x", "--p", "0.5"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        parse_args(["bounds", "--graph", "cube"])  # --p required
    with pytest.raises(SystemExit):
        parse_args(["frobnicate", "--graph", "cube"])


def test_parse_p_grid_inclusive_endpoints():
    assert parse_p_grid("0:1:0.25") == (0.0, 0.25, 0.5, 0.75, 1.0)
    assert parse_p_grid("0.5:0.5:0.1") == (0.5,)
    grid = parse_p_grid("0:1:0.01")
    assert len(grid) == 101
    assert grid[0] == 0.0 and grid[-1] == 1.0


def test_parse_p_grid_clamps_overshoot():
    grid = parse_p_grid("0:1:0.3")
    assert grid[-1] == 1.0
    assert len(grid) == 5  # 0, 0.3, 0.6, 0.9, 1.0


@pytest.mark.parametrize("bad", ["0:1", "0:1:0", "0:1:-0.1", "0.5:0.2:0.1", "0:2:0.5", "a:b:c"])
def test_parse_p_grid_rejections(bad):
    with pytest.raises(BadParameterError):
        parse_p_grid(bad)


# ---------------------------------------------------------------- rows


def test_bounds_row_matches_closed_forms():
    code, out = run_cli(["bounds", "--graph", "tetrahedron", "--p", "0.5"])
    assert code == 0
    header, rows = read_csv(out)
    assert header == MOMENT_COLUMNS
    row = dict(zip(header, rows[0]))
    assert row["graph"] == "tetrahedron"
    assert (row["N"], row["D"], row["p"]) == ("4", "3", "0.5")
    assert row["thm2_first"] == "3.625"
    assert row["thm2_second"] == "13.5625"
    assert float(row["thm1_first"]) == pytest.approx(5.5)
    assert row["best_first"] == "3.625"
    assert row["mean_s"] == "" and row["exact_first"] == ""


def test_oracle_row(k3):
    code, out = run_cli(["oracle", "--graph", "complete(3)", "--p", "0.5"])
    assert code == 0
    _, rows = read_csv(out)
    row = dict(zip(MOMENT_COLUMNS, rows[0]))
    exact = exact_moments(k3, 0.5)
    assert float(row["exact_first"]) == exact.first
    assert float(row["exact_second"]) == exact.second
    assert row["reps"] == "" and row["thm1_first"] == ""


def test_simulate_row_round_trips_floats(cube):
    args = ["simulate", "--graph", "cube", "--p", "0.4", "--reps", "5000", "--seed", "3"]
    code, out = run_cli(args)
    assert code == 0
    _, rows = read_csv(out)
    row = dict(zip(MOMENT_COLUMNS, rows[0]))
    est = estimate_moments(cube, 0.4, 5000, 3)
    # repr round-trip: parsing the CSV cell recovers the exact float
    assert float(row["mean_s"]) == est.mean_s
    assert float(row["se_s"]) == est.se_s
    assert float(row["mean_s2"]) == est.mean_s2
    assert row["reps"] == "5000" and row["seed"] == "3"


def test_cli_output_is_byte_identical_across_runs():
    args = ["simulate", "--graph", "octahedron", "--p", "0.3", "--reps", "4000"]
    assert run_cli(args) == run_cli(args)


def test_sweep_rows_and_oracle_flag():
    args = [
        "sweep", "--graph", "tetrahedron", "--p-grid", "0:1:0.5",
        "--reps", "2000", "--oracle",
    ]
    code, out = run_cli(args)
    assert code == 0
    header, rows = read_csv(out)
    assert header == MOMENT_COLUMNS
    assert [dict(zip(header, r))["p"] for r in rows] == ["0.0", "0.5", "1.0"]
    for r in rows:
        row = dict(zip(header, r))
        assert row["exact_first"] != ""
        assert row["seed"] != ""
    code, out = run_cli(
        ["sweep", "--graph", "tetrahedron", "--p-grid", "0:1:0.5", "--reps", "2000"]
    )
    _, rows = read_csv(out)
    assert all(dict(zip(MOMENT_COLUMNS, r))["exact_first"] == "" for r in rows)


def test_sweep_json_round_trip(tetrahedron):
    args = [
        "sweep", "--graph", "tetrahedron", "--p-grid", "0.2:0.4:0.2",
        "--reps", "3000", "--format", "json",
    ]
    code, out = run_cli(args)
    assert code == 0
    payload = json.loads(out)
    assert [row["p"] for row in payload] == [0.2, 0.4]
    est = estimate_moments(tetrahedron, 0.2, 3000, payload[0]["seed"])
    assert payload[0]["mean_s"] == est.mean_s
    assert payload[0]["exact_first"] is None
    iso = isolation_bounds(BoundParams(degree=3, n_vertices=4, p=0.2))
    assert payload[0]["thm2_first"] == iso.first


def test_dominance_table():
    code, out = run_cli(
        ["dominance", "--graph", "complete(3)", "--p", "0.5", "--reps", "3000"]
    )
    assert code == 0
    header, rows = read_csv(out)
    assert header == DOMINANCE_COLUMNS
    parsed = [dict(zip(header, r)) for r in rows]
    assert {r["generation"] for r in parsed} == {"0", "1", "2"}
    assert all(r["within_tolerance"] in ("true", "false") for r in parsed)
    gen0 = [r for r in parsed if r["generation"] == "0"][0]
    assert gen0["birth_tail"] == "1.0" and gen0["branching_tail"] == "1.0"


def test_polynomial_dump(cube):
    code, out = run_cli(
        ["oracle", "--graph", "cube", "--p", "0.5", "--polynomial", "--format", "json"]
    )
    assert code == 0
    payload = json.loads(out)
    poly = moment_polynomial(cube)
    assert payload["graph"] == "cube"
    assert [int(c) for c in payload["first_counts"]] == list(poly.first_counts)
    code, _ = run_cli(["oracle", "--graph", "cube", "--p", "0.5", "--polynomial"])
    assert code == 2  # csv cannot carry the coefficient lists


# ---------------------------------------------------------------- errors


def test_oracle_refuses_large_graph_with_json_error():
    code, out = run_cli(
        ["oracle", "--graph", "dodecahedron", "--p", "0.5", "--format", "json"]
    )
    assert code == 2
    payload = json.loads(out)
    assert payload["error"] == "TooManyEdges"
    assert "30 edges" in payload["message"]


def test_oracle_cap_env_override(monkeypatch):
    monkeypatch.setenv("PERCMOMENTS_ORACLE_CAP", "2")
    code, _ = run_cli(["oracle", "--graph", "complete(3)", "--p", "0.5"])
    assert code == 2
    monkeypatch.setenv("PERCMOMENTS_ORACLE_CAP", "6")
    code, _ = run_cli(["oracle", "--graph", "tetrahedron", "--p", "0.5"])
    assert code == 0
    monkeypatch.setenv("PERCMOMENTS_ORACLE_CAP", "many")
    code, _ = run_cli(["oracle", "--graph", "complete(3)", "--p", "0.5"])
    assert code == 2


def test_unknown_graph_and_bad_p_exit_2():
    code, _ = run_cli(["bounds", "--graph", "heptagon", "--p", "0.5"])
    assert code == 2
    code, _ = run_cli(["bounds", "--graph", "cube", "--p", "1.5"])
    assert code == 2


def test_missing_edge_file_exits_2(tmp_path):
    code, _ = run_cli(["bounds", "--edge-file", str(tmp_path / "nope.edges"), "--p", "0.5"])
    assert code == 2


def test_edge_file_source(tmp_path, octahedron):
    path = tmp_path / "octa.edges"
    path.write_text(format_edge_file(octahedron))
    code, out = run_cli(["oracle", "--edge-file", str(path), "--p", "0.5"])
    assert code == 0
    _, rows = read_csv(out)
    row = dict(zip(MOMENT_COLUMNS, rows[0]))
    assert row["graph"] == "octa"
    assert float(row["exact_first"]) == exact_moments(octahedron, 0.5).first


def test_output_file(tmp_path):
    target = tmp_path / "row.csv"
    code = main(
        ["bounds", "--graph", "cube", "--p", "0.25", "--output", str(target)]
    )
    assert code == 0
    header, rows = read_csv(target.read_text())
    assert header == MOMENT_COLUMNS and len(rows) == 1


def test_main_returns_codes():
    assert main(["bounds", "--graph", "cube", "--p", "0.5", "--output", "/dev/null"]) == 0
    assert main(["oracle", "--graph", "dodecahedron", "--p", "0.5", "--output", "/dev/null"]) == 2
