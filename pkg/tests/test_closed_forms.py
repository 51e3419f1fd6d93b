import pytest
from conftest import cells
from sympy import Rational

from spin_hurwitz.models.partition import Partition
from spin_hurwitz.services.closed_forms import (
    calligraphic_k_series,
    calligraphic_s_series,
    coth_half_series,
    delta_power_lemma,
    f01_series,
    f02_series,
    forward_difference,
    inversion_power_series,
    lambert_power_series,
    lambert_w_series,
    one_part_double,
    one_part_double_b1,
    one_part_single_fd,
    one_part_single_genus_one,
    one_part_single_stirling,
    qoppa_series,
    stirling2,
    varsigma_series,
)
from spin_hurwitz.services.fock import vev_spin_double


@pytest.mark.parametrize("n, k, expected", [(0, 0, 1), (4, 2, 7), (5, 3, 25), (6, 1, 1), (3, 5, 0)])
def test_stirling2(n, k, expected):
    assert stirling2(n, k) == expected


def test_stirling2_rejects_negative():
    with pytest.raises(ValueError):
        stirling2(-1, 0)


def test_elementary_series():
    assert varsigma_series(5).coefficient(1) == 1
    assert varsigma_series(5).coefficient(3) == Rational(1, 24)
    assert calligraphic_s_series(4).coefficient(2) == Rational(1, 24)
    assert calligraphic_s_series(4, scale=3).coefficient(2) == Rational(9, 24)
    assert qoppa_series(4).coefficient(0) == Rational(1, 2)
    assert qoppa_series(4).coefficient(2) == Rational(1, 16)
    assert calligraphic_k_series(3).coefficient(-1) == Rational(1, 2)
    coth = coth_half_series(3)
    assert coth.coefficient(-1) == 2
    assert coth.coefficient(1) == Rational(1, 6)
    assert coth.coefficient(3) == Rational(-1, 360)


def test_forward_difference():
    assert forward_difference([Rational(v) for v in (1, 4, 9)], 2) == 2
    assert forward_difference([Rational(5)], 0) == 5
    with pytest.raises(ValueError, match="samples"):
        forward_difference([Rational(1)], 1)


@pytest.mark.parametrize("n", range(6))
@pytest.mark.parametrize("nu", range(5))
def test_delta_power_lemma(n, nu):
    assert delta_power_lemma(n, nu)


@pytest.mark.parametrize(
    "g, mu, r, expected",
    [
        (0, 1, 2, 1),
        (1, 5, 2, Rational(25, 4)),
        (1, 3, 4, Rational(7, 6)),
        (2, 9, 6, Rational(11109, 4)),
    ],
)
def test_one_part_single_fd(g, mu, r, expected):
    assert one_part_single_fd(g, mu, r).value == expected


def test_one_part_structural_zeros():
    assert one_part_single_fd(0, 2, 2).is_structural_zero
    assert one_part_single_fd(0, 3, 4).is_structural_zero
    assert one_part_single_stirling(1, 1, 4).is_structural_zero
    assert one_part_single_genus_one(5, 4).is_structural_zero


def _one_part_cells(*ratios: int) -> list[tuple[int, int, int, Rational]]:
    return [(r, g, mu[0], expected) for r in ratios for g, mu, expected in cells(r, parts=1)]


@pytest.mark.parametrize("r, g, mu, expected", _one_part_cells(2, 4))
def test_one_part_routes_reproduce_tables(r, g, mu, expected):
    assert one_part_single_fd(g, mu, r).value == expected
    assert one_part_single_stirling(g, mu, r).value == expected


@pytest.mark.slow
@pytest.mark.parametrize("r, g, mu, expected", _one_part_cells(6))
def test_one_part_routes_reproduce_tables_r6(r, g, mu, expected):
    assert one_part_single_fd(g, mu, r).value == expected
    assert one_part_single_stirling(g, mu, r).value == expected


@pytest.mark.parametrize(
    "r, g, mu, expected", [cell for cell in _one_part_cells(2, 4, 6) if cell[1] == 1]
)
def test_genus_one_formula(r, g, mu, expected):
    assert one_part_single_genus_one(mu, r).value == expected


@pytest.mark.parametrize(
    "g, mu, r, expected",
    [
        (0, 3, 2, Rational(1, 3)),
        (0, 5, 4, Rational(1, 5)),
        (1, 3, 4, Rational(7, 6)),
        (1, 5, 6, 4),
        (2, 3, 6, Rational(49, 12)),
    ],
)
def test_single_completed_cycle(g, mu, r, expected):
    assert one_part_double_b1(g, mu, r).value == expected


def test_single_completed_cycle_rejects_other_b():
    with pytest.raises(ValueError, match="b = 1"):
        one_part_double_b1(1, 5, 2)


@pytest.mark.parametrize(
    "g, d, mu, r",
    [(0, 3, (1, 1, 1), 2), (1, 3, (3,), 2), (0, 5, (3, 1, 1), 2), (0, 5, (1, 1, 1, 1, 1), 4)],
)
def test_one_part_double_matches_fermionic_route(g, d, mu, r):
    expected = vev_spin_double(g, (d,), mu, r).value
    assert one_part_double(g, d, Partition(mu), r).value == expected


def test_one_part_double_value():
    assert one_part_double(0, 3, Partition((1, 1, 1)), 2).value == 2


def test_lambert_series():
    power = lambert_power_series(1, 3)
    assert [power.coefficient(m) for m in range(4)] == [1, 1, Rational(3, 2), Rational(8, 3)]
    w = lambert_w_series(3)
    assert [w.coefficient(m) for m in range(4)] == [0, 1, -1, Rational(3, 2)]


def test_inversion_power_series():
    series = inversion_power_series(1, 1, 5)
    assert [series.coefficient(k) for k in (1, 3, 5)] == [1, 1, Rational(5, 2)]
    assert series.coefficient(2) == 0


def test_genus_zero_one_point():
    assert f01_series(2, 5).coefficient(1) == 1
    assert f01_series(2, 5).coefficient(3) == Rational(1, 3)
    assert f01_series(4, 9).coefficient(9) == Rational(1, 2)
    assert f01_series(2, 5).coefficient(4) == 0


def test_genus_zero_two_point():
    series = f02_series(2, 6)
    assert series.coefficient((1, 1)) == 1
    assert series.coefficient((3, 1)) == Rational(3, 2)
    assert series.coefficient((2, 2)) == 0
    assert f02_series(4, 6).coefficient((1, 1)) == 0


@pytest.mark.parametrize(
    "r, mu, expected",
    [(r, mu, expected) for r in (2, 4) for g, mu, expected in cells(r, parts=2) if g == 0],
)
def test_genus_zero_two_point_matches_tables(r, mu, expected):
    assert f02_series(r, sum(mu)).coefficient(mu) == expected
