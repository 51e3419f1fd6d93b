import pytest
from conftest import cells
from sympy import Rational

from spin_hurwitz.models.hurwitz import ScopeError
from spin_hurwitz.models.tautological import TautExpression
from spin_hurwitz.services.closed_forms import f02_series
from spin_hurwitz.services.cohft_elsv import (
    _lambda_one,
    bernoulli_sum_check,
    decompose_part,
    double_hodge_integral,
    enumerate_spin_weightings,
    enumerate_stable_graphs,
    hodge_integral,
    integrate,
    omega_class_11,
    omega_integral,
    psi_intersection,
    r_matrix_coefficient,
    spin_elsv,
    spin_elsv_double_hodge,
)


@pytest.mark.parametrize(
    "g, exponents, expected",
    [
        (0, (0, 0, 0), 1),
        (0, (1, 0, 0, 0), 1),
        (0, (2, 0, 0, 0, 0), 1),
        (0, (1, 1, 0, 0, 0), 2),
        (1, (1,), Rational(1, 24)),
        (1, (1, 1), Rational(1, 24)),
        (2, (4,), Rational(1, 1152)),
        (2, (3, 2), Rational(29, 5760)),
    ],
)
def test_psi_intersections(g, exponents, expected):
    assert psi_intersection(g, exponents) == expected


def test_psi_intersection_off_dimension():
    assert psi_intersection(1, (2,)) == 0


def test_kappa_integrals():
    assert integrate(TautExpression.kappa(1, 1, 1)) == Rational(1, 24)
    assert integrate(TautExpression.monomial(0, 5, [0] * 5, [1, 1])) == 5
    assert integrate(TautExpression.monomial(0, 5, [1, 0, 0, 0, 0], [1])) == 3


@pytest.mark.parametrize("g, n, count", [(0, 3, 1), (1, 1, 2), (1, 2, 5)])
def test_stable_graph_counts(g, n, count):
    graphs = enumerate_stable_graphs(g, n)
    assert len(graphs) == count
    assert all(graph.genus == g and graph.n == n for graph in graphs)


def test_stable_graph_automorphisms_genus_one():
    assert sorted(graph.automorphisms for graph in enumerate_stable_graphs(1, 1)) == [1, 2]


def test_stable_graph_range():
    with pytest.raises(ValueError, match="stable"):
        enumerate_stable_graphs(0, 2)
    with pytest.raises(ScopeError):
        enumerate_stable_graphs(3, 1)
    with pytest.raises(ScopeError):
        enumerate_stable_graphs(0, 4)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_spin_weightings_satisfy_the_graph(s):
    for graph in enumerate_stable_graphs(1, 2):
        for residues in [(a, b) for a in range(s) for b in range(s)]:
            for weighting in enumerate_spin_weightings(graph, residues, s):
                assert weighting.satisfies(graph)


def test_spin_weighting_validation():
    graph = enumerate_stable_graphs(0, 3)[0]
    with pytest.raises(ValueError, match="Residues"):
        enumerate_spin_weightings(graph, (0, 0, 2), 2)
    with pytest.raises(ValueError, match="leaf residues"):
        enumerate_spin_weightings(graph, (0, 0), 2)


def test_coefficients():
    assert r_matrix_coefficient(1, 0, 1) == Rational(1, 24)
    with pytest.raises(ValueError):
        r_matrix_coefficient(0, 0, 1)


@pytest.mark.parametrize("s", range(1, 7))
def test_bernoulli_sum(s):
    assert bernoulli_sum_check(s)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_omega_class_11(s):
    assert omega_class_11(s) == (s, Rational(1, 2 * s))


def test_omega_integral_residue_obstruction():
    assert omega_integral(1, 1, (1,), 4, (0,)) == 0


def test_omega_integral_validation():
    with pytest.raises(ValueError, match="Residues"):
        omega_integral(1, 1, (2,), 4, (0,))
    with pytest.raises(ValueError, match="non-negative"):
        omega_integral(1, 1, (0,), 2, (-1,))


@pytest.mark.parametrize("mu, s, expected", [(1, 1, (0, 0)), (3, 1, (1, 0)), (5, 2, (1, 1))])
def test_decompose_part(mu, s, expected):
    assert decompose_part(mu, s) == expected


def test_decompose_part_rejects_even():
    with pytest.raises(ValueError, match="odd"):
        decompose_part(4, 2)


@pytest.mark.parametrize(
    "g, mu, r, expected",
    [
        (0, (1,), 2, 1),
        (0, (5,), 4, Rational(1, 5)),
        (1, (3,), 2, 1),
        (0, (3, 1), 2, Rational(3, 2)),
        (0, (1, 1, 1), 2, 4),
        (1, (1,), 4, 0),
    ],
)
def test_spin_elsv_values(g, mu, r, expected):
    assert spin_elsv(g, mu, r) == expected


@pytest.mark.parametrize(
    "mu, r, expected",
    [((1, 1), 2, 1), ((3, 1), 2, Rational(3, 2)), ((5, 5), 2, Rational(125, 4)), ((3, 1), 4, 1)],
)
def test_spin_elsv_unstable_two_point(mu, r, expected):
    assert spin_elsv(0, mu, r) == expected
    assert spin_elsv(0, mu, r) == f02_series(r, sum(mu)).coefficient(mu)


def _elsv_cells():
    params = []
    for r in (2, 4):
        for g, mu, expected in cells(r):
            marks = [pytest.mark.slow] if g == 2 or sum(mu) > 9 else []
            params.append(pytest.param(g, mu, r, expected, marks=marks, id=f"r{r}-g{g}-{mu}"))
    return params


@pytest.mark.parametrize("g, mu, r, expected", _elsv_cells())
def test_spin_elsv_reproduces_tables(g, mu, r, expected):
    assert spin_elsv(g, mu, r) == expected


@pytest.mark.parametrize(
    "g, n, psi, expected",
    [
        (1, 1, [0], Rational(1, 48)),
        (1, 1, [1], Rational(1, 24)),
        (2, 1, [4], Rational(1, 288)),
        (2, 1, [3], Rational(1, 240)),
        (2, 1, [2], Rational(7, 5760)),
        (2, 1, [1], Rational(-1, 2880)),
    ],
)
def test_double_hodge_integrals(g, n, psi, expected):
    assert double_hodge_integral(g, n, psi) == expected


@pytest.mark.parametrize("g, n, k", [(1, 1, 0), (1, 1, 1), (2, 1, 2), (2, 1, 4)])
def test_double_hodge_equals_spin_class_at_r2(g, n, k):
    powers = [k] + [0] * (n - 1)
    assert double_hodge_integral(g, n, powers) == omega_integral(g, n, [0] * n, 2, powers)


@pytest.mark.parametrize(
    "g, mu, expected", [(1, (3,), 1), (1, (1,), Rational(1, 6)), (2, (1,), Rational(1, 72))]
)
def test_double_hodge_form(g, mu, expected):
    assert spin_elsv_double_hodge(g, mu) == expected


def test_double_hodge_form_rejects_even_parts():
    with pytest.raises(ValueError, match="odd"):
        spin_elsv_double_hodge(1, (2,))


@pytest.mark.parametrize(
    "g, psi, lambdas, expected",
    [
        (1, (0,), (1,), Rational(1, 24)),
        (1, (1, 0), (1,), Rational(1, 24)),
        (1, (0,), (1, 1), 0),
        (2, (2,), (2,), Rational(7, 5760)),
        (2, (1,), (1, 2), Rational(1, 2880)),
        (2, (3,), (1,), Rational(1, 480)),
        (2, (2,), (1, 1), Rational(7, 2880)),
        (2, (0,), (2, 2), 0),
        (2, (4,), (), Rational(1, 1152)),
        (2, (3,), (2,), 0),
    ],
)
def test_hodge_integrals(g, psi, lambdas, expected):
    assert hodge_integral(g, psi, lambdas) == expected


@pytest.mark.parametrize(
    "psi, expected",
    [
        ((0,), Rational(1, 24)),
        ((1, 0), Rational(1, 24)),
        ((2, 0, 0), Rational(1, 24)),
        ((1, 1, 0), Rational(1, 12)),
    ],
)
def test_lambda_one_boundary_formula_in_genus_one(psi, expected):
    # lambda_1 = lambda_g in genus one
    assert _lambda_one(1, psi) == hodge_integral(1, psi, (1,)) == expected


def test_hodge_integral_validation():
    with pytest.raises(ValueError, match="stable"):
        hodge_integral(0, (0, 0), ())
    with pytest.raises(ValueError, match="lambda indices"):
        hodge_integral(1, (0,), (2,))
    with pytest.raises(ScopeError):
        hodge_integral(3, (0,), (3,))
