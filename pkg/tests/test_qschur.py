import pytest
from sympy import Rational

from spin_hurwitz.models.gamma import GammaElement
from spin_hurwitz.models.partition import Partition, PartitionClass
from spin_hurwitz.services.partitions import enumerate_partitions
from spin_hurwitz.services.qschur import (
    central_character,
    character,
    character_table,
    dim_v,
    dim_v_closed,
    half_substitution,
    q_matrix,
    q_pair,
    scalar_product,
    schur_q,
)

P1 = GammaElement.power_sum(1)


def gamma(terms):
    return GammaElement({Partition(mu): c for mu, c in terms.items()})


def test_q_pair_low_degrees():
    assert q_pair(1, 0) == gamma({(1,): 2})
    assert q_pair(3, 0) == gamma({(1, 1, 1): Rational(4, 3), (3,): Rational(2, 3)})


@pytest.mark.parametrize("n", range(1, 6))
def test_q_pair_diagonal_vanishes(n):
    assert q_pair(n, n).is_zero


@pytest.mark.parametrize("n, m", [(2, 1), (3, 1), (4, 1), (3, 2), (5, 2)])
def test_q_pair_antisymmetric_and_homogeneous(n, m):
    assert q_pair(n, m) == -q_pair(m, n)
    assert q_pair(n, m).degrees() == {n + m}


def test_schur_q_small():
    assert schur_q(Partition()) == GammaElement.one()
    assert schur_q(Partition((1,))) == gamma({(1,): 2})
    assert schur_q(Partition((2, 1))) == gamma(
        {(1, 1, 1): Rational(4, 3), (3,): Rational(-4, 3)}
    )


def test_schur_q_rejects_non_strict():
    with pytest.raises(ValueError, match="strict"):
        schur_q(Partition((1, 1)))


def test_q_matrix_pads_odd_length():
    matrix = q_matrix(Partition((3, 2, 1)))
    assert len(matrix) == 4
    assert all(matrix[i][i].is_zero for i in range(4))


def test_restricted_schur_q_keeps_only_sub_multisets():
    full = schur_q(Partition((4, 1)))
    restricted = schur_q(Partition((4, 1)), within=Partition((3, 1, 1)))
    assert restricted.coefficient((3, 1, 1)) == full.coefficient((3, 1, 1))
    assert restricted.coefficient((5,)) == 0


@pytest.mark.parametrize(
    "lam, mu, expected",
    [((1,), (1,), 2), ((3,), (1, 1, 1), 8), ((2, 1), (3,), -2), ((3,), (3,), 2)],
)
def test_character_values(lam, mu, expected):
    assert character(Partition(lam), Partition(mu)) == expected


def test_character_rejects_bad_arguments():
    with pytest.raises(ValueError, match="Size mismatch"):
        character(Partition((2, 1)), Partition((1,)))
    with pytest.raises(ValueError, match="odd"):
        character(Partition((2,)), Partition((2,)))
    with pytest.raises(ValueError, match="strict"):
        character(Partition((1, 1)), Partition((1, 1)))


@pytest.mark.parametrize("d", range(1, 8))
def test_characters_are_integers(d):
    for value in character_table(d).values():
        assert isinstance(value, int)


@pytest.mark.parametrize("lam, expected", [((1,), 2), ((2, 1), 4), ((3,), 8)])
def test_dim_v(lam, expected):
    assert dim_v(Partition(lam)) == expected


@pytest.mark.parametrize("d", range(1, 9))
def test_dim_v_closed_formula(d):
    for lam in enumerate_partitions(d, PartitionClass.STRICT):
        assert dim_v(lam) == dim_v_closed(lam)


@pytest.mark.parametrize("lam", [(1,), (2, 1), (3,), (3, 1), (4, 2, 1)])
def test_central_character_of_identity_is_one(lam):
    lam = Partition(lam)
    assert central_character(lam, Partition([1] * lam.size)) == 1


def test_central_character_examples():
    assert central_character(Partition((3,)), Partition((3,))) == 2
    assert central_character(Partition((2, 1)), Partition((5,))) == 0


def test_central_character_padding_rule():
    lam = Partition((4, 1))
    assert central_character(lam, Partition((3, 1))) == 2 * central_character(
        lam, Partition((3, 1, 1))
    )


def test_scalar_product_examples():
    assert scalar_product(P1, P1) == Rational(1, 2)
    q21 = schur_q(Partition((2, 1)))
    assert scalar_product(q21, q21) == 4
    assert scalar_product(GammaElement.one(), P1) == 0


@pytest.mark.parametrize("d", range(1, 7))
def test_schur_q_orthogonality(d):
    strict = enumerate_partitions(d, PartitionClass.STRICT)
    for lam in strict:
        for rho in strict:
            expected = 2**lam.length if lam == rho else 0
            assert scalar_product(schur_q(lam), schur_q(rho)) == expected


def test_half_substitution():
    element = gamma({(3, 1): 1, (1,): 1})
    assert half_substitution(element) == gamma({(3, 1): Rational(1, 4), (1,): Rational(1, 2)})
