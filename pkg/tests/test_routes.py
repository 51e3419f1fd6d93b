import pytest
from sympy import Rational

from spin_hurwitz.models.golden import GoldenCell, GoldenData, GoldenDiff
from spin_hurwitz.models.hurwitz import HurwitzQuery, HurwitzStatus
from spin_hurwitz.services.golden import load_golden, regenerate_table
from spin_hurwitz.services.routes import ROUTES, evaluate


@pytest.mark.parametrize("method", list(ROUTES))
def test_every_route_agrees_on_one_part(method):
    result = evaluate(HurwitzQuery.single(1, (3,), 2), method)
    assert result.status is HurwitzStatus.OK
    assert result.value == 1


@pytest.mark.parametrize(
    "method, status, value",
    [
        ("characters", HurwitzStatus.OK, Rational(3, 2)),
        ("tr", HurwitzStatus.OK, Rational(3, 2)),
        ("elsv", HurwitzStatus.OK, Rational(3, 2)),
        ("fock", HurwitzStatus.METHOD_UNAVAILABLE, 0),
        ("closed", HurwitzStatus.METHOD_UNAVAILABLE, 0),
    ],
)
def test_route_scopes_on_two_parts(method, status, value):
    result = evaluate(HurwitzQuery.single(0, (3, 1), 2), method)
    assert result.status is status
    assert result.value == value
    if status is HurwitzStatus.METHOD_UNAVAILABLE:
        assert result.reason


@pytest.mark.parametrize("mu, r", [((3, 1), 2), ((5, 3), 2), ((3, 1), 4), ((7, 1), 4)])
def test_genus_zero_two_parts_agree_across_routes(mu, r):
    query = HurwitzQuery.single(0, mu, r)
    values = {method: evaluate(query, method).value for method in ("characters", "tr", "elsv")}
    assert len(set(values.values())) == 1, values


def test_genus_zero_one_point_by_recursion():
    assert evaluate(HurwitzQuery.single(0, (5,), 2), "tr").value == Rational(1, 2)
    assert evaluate(HurwitzQuery.single(0, (9,), 4), "tr").value == Rational(1, 2)


def test_recursion_scope():
    high_genus = HurwitzQuery.single(3, (1,), 2)
    assert evaluate(high_genus, "tr").status is HurwitzStatus.METHOD_UNAVAILABLE
    disconnected = HurwitzQuery.single(0, (3, 1), 2, connected=False)
    assert evaluate(disconnected, "tr").status is HurwitzStatus.METHOD_UNAVAILABLE
    assert evaluate(disconnected, "fock").status is HurwitzStatus.OK


@pytest.mark.parametrize("method", ["characters", "tr", "elsv", "closed", "fock"])
def test_structural_zero_through_routes(method):
    result = evaluate(HurwitzQuery.single(0, (2,), 2), method)
    assert result.status is HurwitzStatus.STRUCTURAL_ZERO
    assert result.value == 0


@pytest.mark.parametrize("method", ["characters", "fock"])
def test_disconnected_double(method):
    query = HurwitzQuery.double(0, (3,), (1, 1, 1), 2, connected=False)
    assert evaluate(query, method).value == 2


def test_double_outside_single_routes():
    query = HurwitzQuery.double(0, (3,), (1, 1, 1), 2)
    for method in ("closed", "tr", "elsv"):
        assert evaluate(query, method).status is HurwitzStatus.METHOD_UNAVAILABLE


def test_unknown_method():
    with pytest.raises(ValueError, match="Unknown method"):
        evaluate(HurwitzQuery.single(0, (1,), 2), "monte-carlo")


def test_query_validation():
    with pytest.raises(ValueError, match="even"):
        HurwitzQuery.single(0, (1,), 3)
    with pytest.raises(ValueError, match="same size"):
        HurwitzQuery.double(0, (3,), (1,), 2)


def test_golden_file_contents(golden):
    assert isinstance(golden, GoldenData)
    assert golden.version == 1
    assert len(golden.tables) == 6
    assert sum(len(table.cells) for table in golden.tables) == 79
    assert golden.ratios() == [2, 4, 6]
    assert sum(len(t.cells) for t in golden.tables if t.r == 2) == 37


def test_golden_corrected_cells(golden):
    corrected = [cell for table in golden.tables for cell in table.cells if cell.corrected]
    assert len(corrected) == 12
    one_part = [cell for cell in corrected if len(cell.mu) == 1]
    assert len(one_part) == 1
    (cell,) = one_part
    assert cell.g == 1 and cell.mu == [9]
    assert cell.value == "2645/13"
    assert cell.expected == Rational(3645, 16)
    assert all(cell.g == 0 and len(cell.mu) == 2 for cell in corrected if cell not in one_part)


@pytest.mark.parametrize("r", [2, 4])
def test_golden_two_part_corrections_follow_floor_exponents(golden, r):
    for table in golden.tables:
        if table.r != r:
            continue
        for cell in table.cells:
            if cell.corrected is None or len(cell.mu) != 2:
                continue
            printed = Rational(cell.value)
            ceiling_factor = 1
            for m in cell.mu:
                ceiling_factor *= Rational(m, -(-m // r))
            assert printed == cell.expected * ceiling_factor


def test_golden_cell_expected():
    assert GoldenCell(g=0, mu=[3], value="1/3").expected == Rational(1, 3)
    assert GoldenDiff(r=2, g=0, mu=[3], expected="1/3", computed="1/3").matches
    assert not GoldenDiff(r=2, g=0, mu=[3], expected="1/3", computed="1/2").matches


def test_golden_queries(golden):
    query, cell = golden.tables[0].queries()[0]
    assert query.r == golden.tables[0].r
    assert list(query.mu) == cell.mu
    assert query.connected


def test_load_golden_unknown_preset():
    with pytest.raises(ValueError, match="Unknown preset"):
        load_golden("appendixZ")


def test_regenerate_unknown_ratio():
    with pytest.raises(ValueError, match="no table"):
        regenerate_table("appendixB", r=8)


def test_regenerate_unknown_method():
    with pytest.raises(ValueError, match="Unknown method"):
        regenerate_table("appendixB", r=4, method="abacus")


def test_regenerate_r4_by_closed_formula():
    records, diffs = regenerate_table("appendixB", r=4, method="closed")
    assert len(records) == len(diffs) == 27
    one_part = [d for d in diffs if len(d.mu) == 1]
    assert all(d.matches for d in one_part)
    assert all(r.status is HurwitzStatus.METHOD_UNAVAILABLE for r in records if len(r.mu) > 1)
    assert records == sorted(records, key=lambda r: r.sort_key())


@pytest.mark.slow
def test_regenerate_full_preset():
    _, diffs = regenerate_table()
    assert len(diffs) == 79
    assert all(diff.matches for diff in diffs)
