import pytest
from conftest import cells
from sympy import Rational

from spin_hurwitz.models.hurwitz import HurwitzQuery, HurwitzStatus
from spin_hurwitz.services.fock import vev_spin_double
from spin_hurwitz.services.hurwitz_numbers import (
    connected,
    disconnected,
    generating_series,
    gunningham_general,
    piecewise_polynomiality_check,
    quasi_polynomiality_check,
    riemann_hurwitz_b,
    spin_double_disconnected,
    spin_single_disconnected,
    tau_coefficient,
)


@pytest.mark.parametrize(
    "g, mu, r, expected",
    [
        (0, (3,), 2, Rational(1, 3)),
        (2, (7,), 2, Rational(1409387, 2160)),
        (1, (7,), 4, Rational(35, 2)),
        (0, (1,), 2, 1),
    ],
)
def test_single_disconnected(g, mu, r, expected):
    assert spin_single_disconnected(g, mu, r).value == expected


@pytest.mark.parametrize(
    "query",
    [
        HurwitzQuery.single(0, (2,), 2),
        HurwitzQuery.single(0, (3,), 4),
        HurwitzQuery.double(0, (3,), (2, 1), 2),
    ],
)
def test_structural_zeros(query):
    assert disconnected(query).status is HurwitzStatus.STRUCTURAL_ZERO
    assert connected(query).is_structural_zero


def test_riemann_hurwitz_b():
    assert riemann_hurwitz_b(0, (3,), None, 2) == 1
    assert riemann_hurwitz_b(0, (3,), (1, 1, 1), 2) == 1
    assert riemann_hurwitz_b(1, (5,), (5,), 2) == 1
    assert isinstance(riemann_hurwitz_b(0, (3,), None, 4), str)


def test_double_value():
    assert spin_double_disconnected(0, (3,), (1, 1, 1), 2).value == 2


@pytest.mark.parametrize(
    "g, mu, nu, r",
    [
        (0, (3,), (1, 1, 1), 2),
        (0, (3, 1), (1, 1, 1, 1), 2),
        (1, (5,), (3, 1, 1), 2),
        (0, (5,), (5,), 4),
    ],
)
def test_double_symmetry_and_fermionic_agreement(g, mu, nu, r):
    forward = spin_double_disconnected(g, mu, nu, r).value
    assert forward == spin_double_disconnected(g, nu, mu, r).value
    assert forward == vev_spin_double(g, mu, nu, r).value


def test_double_size_mismatch():
    with pytest.raises(ValueError, match="same size"):
        spin_double_disconnected(0, (3,), (1,), 2)


def test_tau_coefficient_normalisation():
    # 2^{g-1} h / (|Aut mu| |Aut nu|) with g = 0, h = 2, |Aut (1,1,1)| = 6
    assert tau_coefficient(1, (3,), (1, 1, 1), 2) == Rational(1, 6)
    assert tau_coefficient(0, (3,), (1,), 2) == 0


def test_gunningham_general_validation():
    with pytest.raises(ValueError, match="parity"):
        gunningham_general(2, 2, [(1,)], 1)
    with pytest.raises(ValueError, match="odd"):
        gunningham_general(2, 0, [(2,)], 2)
    with pytest.raises(ValueError, match="size"):
        gunningham_general(2, 0, [(3,)], 5)


def test_gunningham_general_symmetric_in_profiles():
    profiles = [(3, 1, 1), (5,), (1, 1, 1, 1, 1)]
    assert gunningham_general(0, 0, profiles, 5) == gunningham_general(
        0, 0, list(reversed(profiles)), 5
    )


@pytest.mark.parametrize(
    "g, mu, r, expected",
    [(0, (3, 1), 2, Rational(3, 2)), (0, (1, 1, 1), 2, 4), (1, (1, 1), 4, Rational(3, 2))],
)
def test_connected_single(g, mu, r, expected):
    assert connected(HurwitzQuery.single(g, mu, r)).value == expected


def test_connected_one_part_equals_disconnected():
    query = HurwitzQuery.single(2, (5,), 2)
    assert connected(query).value == disconnected(query).value == Rational(5975, 144)


def test_connected_rejects_low_truncation():
    query = HurwitzQuery.single(0, (3, 1), 2)
    with pytest.raises(ValueError, match="below"):
        connected(query, degree=2)
    with pytest.raises(ValueError, match="below"):
        generating_series(query, degree=3)


def test_connected_stable_under_higher_truncation():
    query = HurwitzQuery.single(0, (3, 1), 2)
    assert connected(query, degree=6).value == connected(query).value


def _table_params():
    params = []
    for r in (2, 4, 6):
        for g, mu, expected in cells(r):
            marks = [pytest.mark.slow] if r == 6 or sum(mu) > 10 else []
            params.append(pytest.param(r, g, mu, expected, marks=marks, id=f"r{r}-g{g}-{mu}"))
    return params


@pytest.mark.parametrize("r, g, mu, expected", _table_params())
def test_characters_reproduce_tables(r, g, mu, expected):
    assert connected(HurwitzQuery.single(g, mu, r)).value == expected


def test_quasi_polynomiality_genus_zero_three_points():
    report = quasi_polynomiality_check(0, 3, 2, [0, 0, 0])
    assert report.passed
    assert report.fit.polynomial == "4"
    assert len(report.fit.heldout_points) == 3


def test_quasi_polynomiality_rejects_bad_input():
    with pytest.raises(ValueError, match="Unstable"):
        quasi_polynomiality_check(0, 1, 2, [0])
    with pytest.raises(ValueError, match="residues"):
        quasi_polynomiality_check(0, 3, 4, [0, 0])


def test_piecewise_polynomiality_rejects_bad_input():
    with pytest.raises(ValueError, match="unstable"):
        piecewise_polynomiality_check(0, 1, 1, 2)
    with pytest.raises(ValueError, match="not an integer"):
        piecewise_polynomiality_check(0, 1, 2, 2)
