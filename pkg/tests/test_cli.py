import json

import pytest
from click.testing import CliRunner

from knotflype.cli import main
from tests.conftest import FIG8_PD, TREFOIL_PD


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main, list(args), catch_exceptions=False)


def test_validate_ok(runner):
    r = invoke(runner, "validate", "--pd", FIG8_PD)
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["alternating"] and data["reduced"] and data["prime"]


def test_validate_rejects_malformed(runner):
    r = invoke(runner, "validate", "--pd", "X(1,2,3)")
    assert r.exit_code == 1
    data = json.loads(r.output)
    assert "error" in data and "message" in data


def test_exactly_one_input_required(runner):
    r = invoke(runner, "validate", "--pd", FIG8_PD, "--dt", "4 6 8 2")
    assert r.exit_code == 2
    r = invoke(runner, "validate")
    assert r.exit_code == 2


def test_usage_error_is_exit_2(runner):
    r = invoke(runner, "no-such-command")
    assert r.exit_code == 2


def test_sites_empty_for_fig8(runner):
    r = invoke(runner, "sites", "--pd", FIG8_PD)
    assert r.exit_code == 0
    assert json.loads(r.output) == []


def test_graph_single_node_for_fig8(runner):
    r = invoke(runner, "graph", "--pd", FIG8_PD)
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert len(data["nodes"]) == 1
    assert data["complete"]


def test_graph_truncation_is_exit_3(runner):
    # two-node flype graph capped at one node
    r = invoke(
        runner, "graph", "--dt", "8 10 12 14 6 4 2", "--max-nodes", "1"
    )
    assert r.exit_code == 3
    data = json.loads(r.output)
    assert not data["complete"]
    assert len(data["nodes"]) == 1


def test_period_divisibility(runner):
    r = invoke(runner, "period", "--pd", FIG8_PD, "--p", "3")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["period"] is None
    assert "divisibility" in data["reason"]


def test_period_witness_on_torus(runner):
    r = invoke(runner, "period", "--pd", TREFOIL_PD, "--p", "3")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["period"]["p"] == 3


def test_period_rejects_even(runner):
    r = invoke(runner, "period", "--pd", TREFOIL_PD, "--p", "2")
    assert r.exit_code == 1


def test_freeperiod_none_on_fig8(runner):
    r = invoke(runner, "freeperiod", "--pd", FIG8_PD, "--p", "3")
    assert r.exit_code == 0
    assert json.loads(r.output)["free_period"] is None


def test_quotient_of_trefoil(runner):
    r = invoke(runner, "quotient", "--pd", TREFOIL_PD, "--p", "3")
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["quotient"]["crossings"] == 1


def test_bracket_output(runner):
    r = invoke(runner, "bracket", "--pd", FIG8_PD)
    assert r.exit_code == 0
    data = json.loads(r.output)
    assert data["span"] == 16


def test_gauss_and_dt_inputs_agree(runner):
    r1 = invoke(runner, "bracket", "--dt", "4 6 2")
    r2 = invoke(runner, "bracket", "--dt", "4,6,2")
    assert r1.exit_code == r2.exit_code == 0
    assert r1.output == r2.output


def test_census_json_deterministic_across_jobs(runner, tmp_path):
    table = tmp_path / "tiny.txt"
    table.write_text("3_1 4 6 2\n4_1 4 6 8 2\n5_1 6 8 10 2 4\n")
    outs = []
    for jobs in ("1", "2"):
        r = invoke(
            runner, "census", "--table", str(table), "--jobs", jobs
        )
        assert r.exit_code == 0
        outs.append(r.output)
    assert outs[0] == outs[1]
    rows = [json.loads(line) for line in outs[0].splitlines()]
    assert [row["id"] for row in rows] == ["3_1", "4_1", "5_1"]
    assert all(row["status"] == "complete" for row in rows)


def test_census_csv_format(runner, tmp_path):
    table = tmp_path / "tiny.txt"
    table.write_text("3_1 4 6 2\n")
    r = invoke(runner, "census", "--table", str(table), "--format", "csv")
    assert r.exit_code == 0
    lines = r.output.strip().splitlines()
    assert len(lines) == 2
    assert lines[1].startswith("3_1,")
