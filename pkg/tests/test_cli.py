from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

import hfg.cli as cli
from hfg.polycore import ideal_from_json, ideal_to_json, irrelevant_power
from hfg.projective import Point, point_ideal


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli.main, list(args), catch_exceptions=False)


def test_version(runner):
    result = invoke(runner, "--version")
    assert result.exit_code == 0
    assert "hfg" in result.output


def test_grid_json_output(runner):
    result = invoke(runner, "grid", "--m", "2,3,3", "--n", "2,3,4,4")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["shape"] == [3, 4]
    assert data["mult"] == [[3, 4, 5, 5], [4, 5, 6, 6], [4, 5, 6, 6]]
    assert len(data["h_lines"]) == 3
    assert len(data["v_lines"]) == 4


def test_grid_accepts_explicit_point_file(runner, tmp_path):
    payload = {
        "P": [["1", "1", "2"], ["1", "1", "3"]],
        "M": [1, 2],
        "Q": [["1", "2", "1"], ["1", "3", "1"]],
        "N": [1, 1],
    }
    path = tmp_path / "grid.json"
    path.write_text(json.dumps(payload))
    result = invoke(runner, "grid", "--grid", str(path))
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["M"] == [1, 2]
    assert data["row_points"][0] == ["1", "1", "2"]


def test_grid_option_conflict_rejected(runner, tmp_path):
    path = tmp_path / "grid.json"
    path.write_text(json.dumps({"M": [1], "N": [1]}))
    result = runner.invoke(
        cli.main, ["grid", "--grid", str(path), "--m", "1", "--n", "1"]
    )
    assert result.exit_code == 2
    assert "conflicts" in result.output


def test_grid_requires_some_input(runner):
    result = runner.invoke(cli.main, ["grid"])
    assert result.exit_code == 2
    result = runner.invoke(cli.main, ["grid", "--m", "1"])
    assert result.exit_code == 2


def test_malformed_grid_file_is_an_input_error(runner, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{ not json")
    result = runner.invoke(cli.main, ["grid", "--grid", str(path)])
    assert result.exit_code == 2
    assert "input parse error" in result.output
    missing = runner.invoke(cli.main, ["grid", "--grid", str(tmp_path / "no.json")])
    assert missing.exit_code == 2


def test_invalid_multiplicities_are_an_input_error(runner):
    result = runner.invoke(cli.main, ["grid", "--m", "0", "--n", "1"])
    assert result.exit_code == 2
    result = runner.invoke(cli.main, ["grid", "--m", "one", "--n", "1"])
    assert result.exit_code == 2


def test_resolution_command(runner):
    result = invoke(runner, "resolution", "--m", "2,3,3", "--n", "2,3,4,4")
    data = json.loads(result.output)
    assert data["generator_twists"] == [16, 16, 17, 17, 18, 19, 21]
    assert data["syzygy_twists"] == [19, 19, 20, 21, 22, 23]


def test_generators_command(runner):
    result = invoke(runner, "generators", "--m", "1", "--n", "1")
    data = json.loads(result.output)
    assert len(data) == 2
    assert all(g["degree"] == 1 for g in data)
    assert all("polynomial" in g for g in data)


def test_invariants_command_reproduces_example(runner):
    result = invoke(runner, "invariants", "--m", "2,3,3", "--n", "2,3,4,4")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["alpha"] == 16
    assert data["beta"] == 21
    assert data["waldschmidt"] == "16/1"
    assert data["resurgence"] == 1
    assert data["alpha_tuple"][:3] == [21, 21, 17]


def test_invariants_table_format(runner):
    result = invoke(
        runner, "invariants", "--m", "2,3,3", "--n", "2,3,4,4", "--format", "table"
    )
    assert result.exit_code == 0
    assert "alpha_tuple" in result.output
    assert "16/1" in result.output


def test_budget_flag_controls_grid_cap(runner):
    over = runner.invoke(
        cli.main, ["verify", "--m", "2,3,3", "--n", "2,3,4,4", "--t-max", "1"]
    )
    assert over.exit_code == 2
    assert "budget exceeded" in over.output
    bad = runner.invoke(cli.main, ["verify", "--m", "1", "--n", "1", "--budget-degree", "-3"])
    assert bad.exit_code == 2


def test_verify_small_grid_passes(runner):
    result = invoke(runner, "verify", "--m", "1", "--n", "1,2")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["passed"] is True
    assert data["checks"] >= 5
    assert all(inst["passed"] for inst in data["instances"])


def test_verify_output_is_identical_across_job_counts(runner):
    sequential = invoke(runner, "verify", "--m", "1,2", "--n", "1,2", "--jobs", "1")
    parallel = invoke(runner, "verify", "--m", "1,2", "--n", "1,2", "--jobs", "3")
    assert sequential.exit_code == parallel.exit_code == 0
    assert sequential.output == parallel.output


def test_verify_failure_sets_exit_code_one(runner, monkeypatch):
    def broken(grid_json, budget):
        return {
            "instances": [
                {
                    "label": "forced failure",
                    "expected": "pass",
                    "computed": "fail",
                    "passed": False,
                    "flag": None,
                }
            ]
        }

    monkeypatch.setattr(cli, "_structure_job", broken)
    result = runner.invoke(cli.main, ["verify", "--m", "1", "--n", "1"])
    assert result.exit_code == 1
    assert "verification failed" in result.output


def test_hadamard_and_join_commands(runner, tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps(ideal_to_json(irrelevant_power(2))))
    b.write_text(json.dumps(ideal_to_json(irrelevant_power(2))))
    joined = invoke(runner, "join", "--ideal-a", str(a), "--ideal-b", str(b))
    assert joined.exit_code == 0
    out = ideal_from_json(json.loads(joined.output))
    from hfg.polycore import ideal_equal

    assert ideal_equal(out, irrelevant_power(3))

    p = tmp_path / "p.json"
    q = tmp_path / "q.json"
    p.write_text(json.dumps(ideal_to_json(point_ideal(Point((1, 2, 3))))))
    q.write_text(json.dumps(ideal_to_json(point_ideal(Point((2, 1, 1))))))
    product = invoke(runner, "hadamard", "--ideal-a", str(p), "--ideal-b", str(q))
    assert product.exit_code == 0
    from hfg.projective import hadamard_point

    expected = point_ideal(hadamard_point(Point((1, 2, 3)), Point((2, 1, 1))))
    assert ideal_equal(ideal_from_json(json.loads(product.output)), expected)


def test_hadamard_rejects_missing_file(runner, tmp_path):
    result = runner.invoke(
        cli.main,
        ["hadamard", "--ideal-a", str(tmp_path / "x.json"), "--ideal-b", str(tmp_path / "y.json")],
    )
    assert result.exit_code == 2


def test_power_check_command(runner):
    result = invoke(runner, "power-check", "--p", "1:2:3", "--q", "2:1:1", "-m", "2", "-n", "2")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["passed"] is True


def test_power_check_rejects_undefined_product(runner):
    result = runner.invoke(cli.main, ["power-check", "--p", "1:0:0", "--q", "0:1:0"])
    assert result.exit_code == 2
    assert "domain error" in result.output


def test_power_check_rejects_bad_point_text(runner):
    result = runner.invoke(cli.main, ["power-check", "--p", "1:2", "--q", "1:1:1"])
    assert result.exit_code == 2
    assert "input parse error" in result.output


def test_table_and_json_carry_the_same_data(runner):
    as_json = invoke(runner, "resolution", "--m", "1,2", "--n", "1,2")
    as_table = invoke(runner, "resolution", "--m", "1,2", "--n", "1,2", "--format", "table")
    data = json.loads(as_json.output)
    for key, value in data.items():
        assert key in as_table.output
        for item in value:
            assert str(item) in as_table.output
