import json

import pytest
from click.testing import CliRunner

from spin_hurwitz.cli import EXIT_MISMATCH, EXIT_SCOPE, EXIT_USAGE, consensus, main
from spin_hurwitz.models.hurwitz import HurwitzQuery, HurwitzValue, ResultRecord


@pytest.fixture
def runner():
    return CliRunner()


def test_single_structural_zero(runner):
    result = runner.invoke(main, ["single", "--r", "2", "--g", "0", "--mu", "2"])
    assert result.exit_code == 0
    assert "structural-zero" in result.output


def test_single_all_methods_agree(runner):
    result = runner.invoke(main, ["single", "--r", "2", "--g", "1", "--mu", "3", "--method", "all"])
    assert result.exit_code == 0
    assert "consensus: agree" in result.output
    for method in ("characters", "fock", "closed", "tr", "elsv"):
        assert method in result.output


def test_single_two_parts_all_methods_agree(runner):
    result = runner.invoke(
        main, ["single", "--r", "2", "--g", "0", "--mu", "3,1", "--method", "all"]
    )
    assert result.exit_code == 0
    assert "consensus: agree" in result.output
    assert "3/2" in result.output
    assert "9/4" not in result.output


def test_single_json(runner):
    result = runner.invoke(
        main, ["single", "--r", "2", "--g", "0", "--mu", "3 1", "--format", "json"]
    )
    assert result.exit_code == 0
    (record,) = json.loads(result.output)
    assert record == {
        "r": 2,
        "g": 0,
        "mu": [3, 1],
        "nu": None,
        "method": "characters",
        "value": "3/2",
        "status": "ok",
    }


def test_single_csv(runner):
    result = runner.invoke(
        main, ["single", "--r", "4", "--g", "1", "--mu", "7", "--format", "csv"]
    )
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "r,g,mu,nu,method,value,status"
    assert lines[1] == "4,1,(7),,characters,35/2,ok"


def test_single_out_of_scope(runner):
    result = runner.invoke(
        main, ["single", "--r", "2", "--g", "0", "--mu", "3,1", "--method", "closed"]
    )
    assert result.exit_code == EXIT_SCOPE
    assert "method-unavailable" in result.output


@pytest.mark.parametrize(
    "args",
    [
        ["single", "--r", "3", "--g", "0", "--mu", "1"],
        ["single", "--r", "2", "--g", "0", "--mu", "0,1"],
        ["single", "--r", "2", "--g", "0", "--mu", "a"],
        ["single", "--r", "2", "--g", "-1", "--mu", "1"],
        ["double", "--r", "2", "--g", "0", "--mu", "3", "--nu", "1"],
        ["table", "--preset", "appendixZ"],
        ["table", "--r", "8"],
        ["crosscheck", "--suite", "galois"],
        ["nonsense"],
    ],
)
def test_usage_errors(runner, args):
    result = runner.invoke(main, args)
    assert result.exit_code == EXIT_USAGE


def test_double_disconnected(runner):
    result = runner.invoke(main, ["double", "--r", "2", "--g", "0", "--mu", "3", "--nu", "1,1,1"])
    assert result.exit_code == 0
    assert "(1,1,1)" in result.output
    assert "characters  2" in result.output


def test_table_reports_mismatches(runner):
    result = runner.invoke(main, ["table", "--r", "4", "--method", "closed", "--format", "csv"])
    assert result.exit_code == EXIT_MISMATCH
    assert "27 cells" in result.output
    assert "mismatch r=4" in result.output


def test_output_file(runner, tmp_path):
    target = tmp_path / "out" / "h.csv"
    result = runner.invoke(
        main,
        ["single", "--r", "2", "--g", "0", "--mu", "5", "--format", "csv", "--output", str(target)],
    )
    assert result.exit_code == 0
    assert "Wrote" in result.output
    assert target.read_text().splitlines()[1] == "2,0,(5),,characters,1/2,ok"


def test_crosscheck_report(runner):
    result = runner.invoke(main, ["crosscheck", "--suite", "euler"])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["passed"] is True
    assert report["suites"][0]["name"] == "euler"


def test_verbose_flag(runner):
    result = runner.invoke(main, ["-v", "single", "--r", "2", "--g", "0", "--mu", "1"])
    assert result.exit_code == 0


def test_invalid_environment_is_a_usage_error(runner, fresh_settings):
    fresh_settings.setenv("SPINH_TRUNCATION_MARGIN", "-1")
    result = runner.invoke(main, ["single", "--r", "2", "--g", "0", "--mu", "1"])
    assert result.exit_code == EXIT_USAGE


def _record(method, value, status="ok"):
    query = HurwitzQuery.single(0, (1,), 2)
    if status == "ok":
        result = HurwitzValue.computed(value)
    else:
        result = HurwitzValue.unavailable("out of range")
    return ResultRecord.from_value(query, method, result)


def test_consensus():
    assert consensus([_record("a", 1), _record("b", 1)]) == "agree"
    assert consensus([_record("a", 1), _record("b", 2)]) == "disagree"
    assert consensus([_record("a", 1), _record("b", 0, status="unavailable")]) == "agree"
    assert consensus([_record("a", 0, status="unavailable")]) is None
