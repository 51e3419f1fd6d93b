import pytest

from spin_hurwitz.models.reports import SuiteResult
from spin_hurwitz.services.crosscheck import GRIDS, SUITES, run_crosscheck


def test_grids_and_suites():
    assert sorted(GRIDS) == ["full", "quick"]
    assert list(SUITES) == [
        "euler",
        "orthogonality",
        "operators",
        "routes",
        "f02",
        "tr",
        "reduced",
        "elsv",
        "polynomiality",
    ]
    assert not GRIDS["quick"].polynomiality


@pytest.mark.parametrize("suite", ["euler", "orthogonality", "operators", "f02"])
def test_quick_suite_passes(suite):
    report = run_crosscheck("quick", [suite])
    assert report.passed
    (result,) = report.suites
    assert result.name == suite
    assert result.cases > 0


def test_polynomiality_skipped_on_quick_grid():
    report = run_crosscheck("quick", ["polynomiality"])
    assert report.passed
    assert report.suites[0].cases == 0


def test_summary_shape():
    summary = run_crosscheck("quick", ["euler"]).summary()
    assert summary["grid"] == "quick"
    assert summary["passed"] is True
    assert summary["suites"][0]["name"] == "euler"
    assert summary["suites"][0]["failures"] == []


def test_failing_case_is_recorded():
    result = SuiteResult(name="demo")
    result.check(True, "a")
    result.check(False, "b")
    assert result.cases == 2
    assert result.failures == ["b"]
    assert not result.passed


def test_unknown_names():
    with pytest.raises(ValueError, match="Unknown grid"):
        run_crosscheck("huge")
    with pytest.raises(ValueError, match="Unknown suites"):
        run_crosscheck("quick", ["euler", "galois"])


@pytest.mark.slow
def test_quick_grid_passes():
    assert run_crosscheck("quick").passed


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["routes", "tr", "reduced", "elsv"])
def test_quick_grid_heavy_suites(suite):
    assert run_crosscheck("quick", [suite]).passed
