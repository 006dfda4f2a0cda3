import json

import pytest
from click.testing import CliRunner

from rahman.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def test_check_ok(runner):
    result = runner.invoke(main, ["check", "--p", "1,2,3,5"])
    assert result.exit_code == 0
    assert result.output.strip() == "ok"


def test_check_names_offending_expression(runner):
    result = runner.invoke(main, ["check", "--p", "1,2,3,6"])
    assert result.exit_code == 2
    assert "p1p4-p2p3" in result.output


def test_check_requires_parameters(runner):
    result = runner.invoke(main, ["check"])
    assert result.exit_code == 2


def test_eval_spot_value(runner):
    result = runner.invoke(main, ["eval", "1", "0", "1", "0", "--p", "1,2,3,5", "--N", "1"])
    assert result.exit_code == 0
    assert result.output.strip() == "-1/11"


def test_eval_requires_n(runner):
    result = runner.invoke(main, ["eval", "0", "0", "0", "0", "--p", "1,2,3,5"])
    assert result.exit_code == 2


def test_table_json(runner):
    result = runner.invoke(main, ["table", "--p", "1,2,3,5", "--N", "1"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["pairs"] == [[0, 0], [1, 0], [0, 1]]
    assert data["values"][1][1] == "-1/11"


def test_table_deterministic(runner):
    args = ["table", "--p", "2,1,7,3", "--N", "2", "--format", "csv"]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.exit_code == second.exit_code == 0
    assert first.output == second.output


def test_verify_all_passes(runner):
    result = runner.invoke(main, ["verify", "all", "--p", "1,2,3,5", "--N", "1"])
    assert result.exit_code == 0
    reports = json.loads(result.output)
    assert reports and all(r["status"] == "pass" for r in reports)


def test_verify_single_suite_flag(runner):
    result = runner.invoke(main, ["verify", "--suite", "structure", "--p", "1,2,3,5", "--N", "1"])
    assert result.exit_code == 0
    reports = json.loads(result.output)
    assert all(r["name"].startswith("structure.") for r in reports)


def test_verify_unknown_suite(runner):
    result = runner.invoke(main, ["verify", "bogus", "--p", "1,2,3,5", "--N", "1"])
    assert result.exit_code == 2


def test_params_file(runner, tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"p": ["1", "2", "3", "5"], "N": 1}))
    result = runner.invoke(main, ["eval", "1", "0", "1", "0", "--params-file", str(path)])
    assert result.exit_code == 0
    assert result.output.strip() == "-1/11"


def test_export_structure(runner):
    result = runner.invoke(main, ["export", "structure", "--p", "1,2,3,5"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["constants"]["nu"] == "672"
    assert data["R"][0][0] == "1/28"


def test_export_gram_csv(runner):
    result = runner.invoke(
        main, ["export", "gram", "--p", "1,2,3,5", "--N", "1", "--format", "csv"]
    )
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "r,s,t,norm_squared"
    assert len(lines) == 4


def test_out_file(runner, tmp_path):
    target = tmp_path / "out.txt"
    result = runner.invoke(
        main, ["eval", "0", "0", "0", "0", "--p", "1,2,3,5", "--N", "2", "--out", str(target)]
    )
    assert result.exit_code == 0
    assert target.read_text().strip() == "1"


def test_n_ceiling(runner, monkeypatch):
    result = runner.invoke(main, ["table", "--p", "1,2,3,5", "--N", "13"])
    assert result.exit_code == 2
    monkeypatch.setenv("RAHMAN_MAX_N", "2")
    result = runner.invoke(main, ["table", "--p", "1,2,3,5", "--N", "3"])
    assert result.exit_code == 2
