import json

import pytest
from sympy import Rational

from spin_hurwitz.models.gamma import GammaElement
from spin_hurwitz.models.generating import CONSTANT_KEY, GeneratingSeries
from spin_hurwitz.models.hurwitz import (
    HurwitzQuery,
    HurwitzStatus,
    HurwitzValue,
    ResultRecord,
    format_rational,
)
from spin_hurwitz.models.partition import EMPTY, Partition
from spin_hurwitz.models.series import TruncatedSeries
from spin_hurwitz.utils.file_manager import write_text_file
from spin_hurwitz.utils.formatting import (
    CSV_HEADER,
    records_to_csv,
    records_to_json,
    records_to_table,
    render_records,
)


@pytest.mark.parametrize(
    "value, text", [(Rational(9, 4), "9/4"), (Rational(4), "4"), (Rational(-1, 2880), "-1/2880")]
)
def test_format_rational(value, text):
    assert format_rational(value) == text


def test_branch_points():
    assert HurwitzQuery.single(2, (7,), 2).branch_points() == 5
    assert HurwitzQuery.double(0, (3,), (1, 1, 1), 2).branch_points() == 1
    with pytest.raises(ValueError, match="No covers"):
        HurwitzQuery.single(0, (3,), 4).branch_points()


def test_query_label():
    assert HurwitzQuery.single(1, (3, 1), 2).label() == "g=1 r=2 mu=(3,1)"
    assert HurwitzQuery.double(0, (3,), (1, 1, 1), 2).label() == "g=0 r=2 mu=(3) nu=(1,1,1)"


def test_hurwitz_value_constructors():
    assert HurwitzValue.computed("9/4").value == Rational(9, 4)
    zero = HurwitzValue.structural_zero("no covers")
    assert zero.value == 0 and zero.is_structural_zero
    assert HurwitzValue.unavailable("out of range").status is HurwitzStatus.METHOD_UNAVAILABLE


def _records():
    single = HurwitzQuery.single(0, (3, 1), 2)
    double = HurwitzQuery.double(0, (3,), (1, 1, 1), 2, connected=False)
    return [
        ResultRecord.from_value(single, "tr", HurwitzValue.computed(Rational(9, 4))),
        ResultRecord.from_value(double, "characters", HurwitzValue.computed(2)),
    ]


def test_result_record_ordering():
    records = sorted(_records(), key=ResultRecord.sort_key)
    assert [r.method for r in records] == ["characters", "tr"]


def test_records_to_csv():
    lines = records_to_csv(_records()).splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert lines[1] == '2,0,"(3,1)",,tr,9/4,ok'
    assert lines[2] == '2,0,(3),"(1,1,1)",characters,2,ok'


def test_records_to_json():
    payload = json.loads(records_to_json(_records()))
    assert payload[0]["value"] == "9/4"
    assert payload[0]["nu"] is None
    assert payload[1]["nu"] == [1, 1, 1]
    assert list(payload[0]) == list(CSV_HEADER)


def test_records_to_table():
    lines = records_to_table(_records()).splitlines()
    assert lines[0].split() == list(CSV_HEADER)
    assert lines[1].split() == ["2", "0", "(3,1)", "tr", "9/4", "ok"]


def test_render_records_unknown_format():
    assert render_records([], "csv") == ",".join(CSV_HEADER) + "\n"
    with pytest.raises(ValueError, match="Unknown format"):
        render_records([], "xml")


def test_write_text_file(tmp_path):
    target = tmp_path / "nested" / "out.txt"
    assert write_text_file(target, "h = 9/4\n")
    assert target.read_text(encoding="utf-8") == "h = 9/4\n"


def test_write_text_file_failure(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert not write_text_file(blocker / "child.txt", "content")


def test_partition_operations():
    mu = Partition((3, 1, 1))
    assert mu.union((5, 1)) == Partition((5, 3, 1, 1, 1))
    assert mu.contains(Partition((3, 1)))
    assert not mu.contains(Partition((3, 3)))
    assert EMPTY.size == 0 and EMPTY.length == 0
    with pytest.raises(ValueError, match="positive"):
        Partition((2, 0))


def test_gamma_arithmetic():
    p1, p3 = GammaElement.power_sum(1), GammaElement.power_sum(3)
    product = (p1 + p3) * (p1 - p3)
    assert product.coefficient((1, 1)) == 1
    assert product.coefficient((3, 3)) == -1
    assert product.coefficient((3, 1)) == 0
    assert product.degrees() == {2, 6}
    assert (p1 * GammaElement.one()) == p1
    assert (p1 - p1).is_zero


def test_gamma_restriction_and_substitution():
    square = GammaElement.power_sum(1) * GammaElement.power_sum(1)
    assert GammaElement.power_sum(1).multiply(GammaElement.power_sum(1), Partition((3, 1))).is_zero
    assert square.substitute_scaled(Rational(1, 2)).coefficient((1, 1)) == Rational(1, 4)
    assert square.restrict(Partition((1, 1, 1))) == square


def test_gamma_rejects_even_power_sums():
    with pytest.raises(ValueError, match="odd"):
        GammaElement({(2,): 1})


def test_series_arithmetic():
    z = TruncatedSeries([0, 1], variable="z").pad(4)
    exp_z = z.exp()
    assert [exp_z.coefficient(k) for k in range(5)] == [
        1,
        1,
        Rational(1, 2),
        Rational(1, 6),
        Rational(1, 24),
    ]
    assert exp_z.log() == z
    assert (exp_z * exp_z.inverse()).coefficient(3) == 0
    assert (exp_z**2).coefficient(2) == 2
    assert exp_z.power(Rational(1, 2)) == TruncatedSeries.exponential(Rational(1, 2), 4)


def test_series_precision():
    series = TruncatedSeries([1, 2, 3])
    assert series.precision == 3
    with pytest.raises(ArithmeticError, match="beyond precision"):
        series.coefficient(3)
    assert series.shift(-1).coefficient(-1) == 1
    assert series.derivative().coefficient(0) == 2
    assert series.truncate(1).precision == 2


def test_series_compose():
    z = TruncatedSeries([0, 1, 0, 0, 0])
    exp_z = TruncatedSeries.exponential(1, 4)
    assert exp_z.compose(z.scale(2)) == TruncatedSeries.exponential(2, 4)
    with pytest.raises(ValueError, match="constant term"):
        exp_z.compose(exp_z)


def test_generating_series_log():
    x = (0, Partition((1,)), Partition((1,)))
    xx = (0, Partition((1, 1)), Partition((1, 1)))
    series = GeneratingSeries(2, {CONSTANT_KEY: 1, x: 1, xx: Rational(1, 2)})
    assert series.log_coefficient(x) == 1
    assert series.log_coefficient(xx) == 0
    with pytest.raises(ValueError, match="truncation degree"):
        GeneratingSeries(1, {xx: 1})
