from math import factorial

import pytest
from sympy import Rational

from spin_hurwitz.models.clifford import CliffordState, OperatorKind, QuadraticOperator
from spin_hurwitz.models.hurwitz import HurwitzStatus, ScopeError
from spin_hurwitz.models.partition import Partition
from spin_hurwitz.services.closed_forms import one_part_single_fd
from spin_hurwitz.services.fock import (
    alpha_negative_product_expansion,
    apply_alpha,
    apply_cutjoin,
    apply_operator,
    apply_phi,
    basis_monomials,
    commutator_check,
    cutjoin_eigenvalue_check,
    e_operator_vev,
    heisenberg_check,
    one_alpha_correlator,
    parity_check,
    vev,
    vev_spin_double,
    vev_spin_double_diagonal,
    vev_spin_single,
)
from spin_hurwitz.services.qschur import character

VACUUM = CliffordState.vacuum()


def test_negative_mode_annihilates_vacuum():
    assert apply_phi(-1, VACUUM).is_zero


def test_phi_zero_squares_to_half():
    assert apply_phi(0, apply_phi(0, VACUUM)) == VACUUM.scale(Rational(1, 2))


def test_phi_products_are_canonical():
    state = apply_phi(3, apply_phi(1, VACUUM))
    assert state == CliffordState.basis((3, 1))
    assert apply_phi(1, apply_phi(3, VACUUM)) == CliffordState.basis((3, 1)).scale(-1)


@pytest.mark.parametrize("l", [1, 2, 3])
def test_two_point_vacuum_expectation(l):
    assert vev(apply_phi(-l, apply_phi(l, VACUUM))) == (-1) ** l


def test_non_canonical_monomial_rejected():
    with pytest.raises(ValueError, match="Non-canonical"):
        CliffordState({(1, 3): 1})


def test_alpha_on_vacuum():
    assert apply_alpha(1, VACUUM).is_zero
    commutator = apply_alpha(1, apply_alpha(-1, VACUUM)) - apply_alpha(-1, apply_alpha(1, VACUUM))
    assert commutator == VACUUM.scale(Rational(1, 2))


def test_alpha_rejects_even_mode():
    with pytest.raises(ValueError, match="odd"):
        apply_alpha(2, VACUUM)


@pytest.mark.parametrize("monomial, eigenvalue", [((), 0), ((3, 1), 28), ((2, 1), 9), ((3, 0), 27)])
def test_cutjoin_eigenvalues(monomial, eigenvalue):
    state = CliffordState.basis(monomial)
    assert apply_cutjoin(2, state) == state.scale(eigenvalue)


def test_cutjoin_rejects_odd_r():
    with pytest.raises(ValueError):
        apply_cutjoin(3, VACUUM)


@pytest.mark.parametrize(
    "mu, monomial, expected", [((1,), (1, 0), 1), ((1, 1, 1), (3, 0), 1), ((3,), (2, 1), -1)]
)
def test_boson_product_coefficients(mu, monomial, expected):
    assert alpha_negative_product_expansion(Partition(mu)).coefficient(monomial) == expected


@pytest.mark.parametrize("mu", [(3,), (1, 1, 1), (5,), (3, 1, 1)])
def test_boson_product_matches_characters(mu):
    mu = Partition(mu)
    state = alpha_negative_product_expansion(mu)
    for monomial, value in state.terms.items():
        lam = Partition([i for i in monomial if i > 0])
        assert value == Rational(character(lam, mu), 2**mu.length)


def test_apply_operator_dispatch():
    state = CliffordState.basis((3, 1))
    cut_join = QuadraticOperator(kind=OperatorKind.CUT_JOIN, r=2)
    assert apply_operator(cut_join, state) == state.scale(28)
    alpha = QuadraticOperator(kind=OperatorKind.ALPHA, m=-1)
    assert apply_operator(alpha, VACUUM) == apply_alpha(-1, VACUUM)


def test_basis_monomials_energy_two():
    assert basis_monomials(2) == [(), (0,), (1,), (1, 0), (2,), (2, 0)]


def test_e_operator_vacuum_expectation():
    series = e_operator_vev(0, 4)
    assert series.coefficient(-1) == Rational(1, 2)
    assert series.coefficient(0) == 0
    assert series.coefficient(1) == Rational(1, 24)
    assert series.coefficient(3) == Rational(-1, 1440)
    assert all(e_operator_vev(1, 3).coefficient(k) == 0 for k in range(-1, 4))


def test_heisenberg_relations():
    assert heisenberg_check(3, 4)


@pytest.mark.parametrize("r", [2, 4])
def test_cutjoin_diagonal_on_basis(r):
    assert cutjoin_eigenvalue_check(r, 5)


@pytest.mark.parametrize("m", range(-2, 3))
def test_e_operator_parity(m):
    assert parity_check(m, 3, 3)


@pytest.mark.parametrize("m, n", [(1, -1), (0, 0), (1, 1)])
def test_e_operator_commutators(m, n):
    assert commutator_check(m, n, 2, 3)


@pytest.mark.slow
def test_e_operator_commutator_higher_modes():
    assert commutator_check(3, -1, 3, 5)


@pytest.mark.parametrize(
    "g, mu, r, expected",
    [(0, (1,), 2, 1), (1, (3,), 2, 1), (0, (5,), 4, Rational(1, 5)), (0, (3,), 2, Rational(1, 3))],
)
def test_vev_spin_single(g, mu, r, expected):
    assert vev_spin_single(g, mu, r).value == expected


def test_vev_spin_single_structural_zero():
    result = vev_spin_single(0, (2,), 2)
    assert result.status is HurwitzStatus.STRUCTURAL_ZERO
    assert vev_spin_single(0, (3,), 4).is_structural_zero


@pytest.mark.parametrize("r", [2, 4])
@pytest.mark.parametrize("mu", [1, 3, 5, 7])
def test_one_part_vev_matches_finite_differences(mu, r):
    for g in range(2):
        fd = one_part_single_fd(g, mu, r)
        if fd.is_structural_zero:
            continue
        b = (2 * g - 1 + mu) // r
        expectation = one_alpha_correlator(mu, r, b)
        normalized = Rational(2) ** (1 - g) * expectation / (factorial(b) * mu * (r + 1) ** b)
        assert normalized == fd.value
        assert vev_spin_single(g, (mu,), r).value == fd.value


def test_vev_spin_double():
    assert vev_spin_double(0, (1,), (1,), 2).value == 1
    assert vev_spin_double(0, (3,), (1, 1, 1), 2).value / 6 == Rational(1, 3)


def test_vev_spin_double_size_mismatch():
    with pytest.raises(ValueError, match="same size"):
        vev_spin_double(0, (3,), (1,), 2)


@pytest.mark.parametrize("mu, nu", [((1,), (1,)), ((3,), (1, 1, 1)), ((3, 1), (3, 1))])
def test_diagonal_extraction_matches_cutjoin_route(mu, nu):
    assert vev_spin_double_diagonal(0, mu, nu, 2) == vev_spin_double(0, mu, nu, 2)


def test_diagonal_extraction_scope():
    with pytest.raises(ScopeError):
        vev_spin_double_diagonal(1, (5,), (1, 1, 1, 1, 1), 2)
