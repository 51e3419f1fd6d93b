from math import factorial

import pytest

from spin_hurwitz.models.partition import Partition, PartitionClass, ones
from spin_hurwitz.services.partitions import (
    aut_order,
    enumerate_partitions,
    parity_delta,
    partition_count,
    power_sum_eval,
    spin_decomposition,
    sub_multisets,
    z_factor,
)


def test_partition_classes():
    assert [flavor.name for flavor in PartitionClass] == ["ALL", "ODD", "STRICT"]


@pytest.mark.parametrize("flavor", list(PartitionClass))
def test_enumerate_zero_is_empty_partition(flavor):
    assert enumerate_partitions(0, flavor) == [Partition()]


def test_enumerate_reverse_lexicographic():
    assert enumerate_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("flavor", [PartitionClass.ODD, PartitionClass.STRICT])
def test_enumerate_nine(flavor):
    partitions = enumerate_partitions(9, flavor)
    assert len(partitions) == 8
    assert len(set(partitions)) == 8
    assert all(p.belongs_to(flavor) and p.size == 9 for p in partitions)


@pytest.mark.parametrize("d", range(31))
def test_euler_odd_equals_strict(d):
    odd = enumerate_partitions(d, PartitionClass.ODD)
    strict = enumerate_partitions(d, PartitionClass.STRICT)
    assert len(odd) == len(strict)


@pytest.mark.parametrize("d", range(21))
def test_enumeration_matches_pentagonal_count(d):
    assert len(enumerate_partitions(d)) == partition_count(d)


def test_partition_count_values():
    assert [partition_count(d) for d in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert partition_count(20) == 627


def test_enumerate_rejects_negative():
    with pytest.raises(ValueError):
        enumerate_partitions(-1)


@pytest.mark.parametrize(
    "mu, expected", [((1,), 1), ((3, 1, 1), 6), ((), 1), ((2, 2, 1), 8)]
)
def test_z_factor(mu, expected):
    assert z_factor(Partition(mu)) == expected


@pytest.mark.parametrize("d", range(1, 9))
def test_class_sizes_are_integers(d):
    total = 0
    for mu in enumerate_partitions(d):
        assert factorial(d) % z_factor(mu) == 0
        total += factorial(d) // z_factor(mu)
    assert total == factorial(d)


@pytest.mark.parametrize("lam, expected", [((3,), 1), ((2, 1), 0), ((), 0), ((5, 3, 1), 1)])
def test_parity_delta(lam, expected):
    assert parity_delta(Partition(lam)) == expected


def test_parity_delta_rejects_non_strict():
    with pytest.raises(ValueError, match="strict"):
        parity_delta(Partition((2, 2)))


@pytest.mark.parametrize("mu, expected", [((5, 3), 1), ((1, 1, 1), 6), ((5, 5, 3), 2)])
def test_aut_order(mu, expected):
    assert aut_order(Partition(mu)) == expected


@pytest.mark.parametrize("lam, k, expected", [((3,), 3, 27), ((2, 1), 3, 9), ((), 5, 0)])
def test_power_sum_eval(lam, k, expected):
    assert power_sum_eval(Partition(lam), k) == expected


def test_sub_multisets():
    assert sub_multisets(Partition((3, 1, 1))) == [(), (1,), (1, 1), (3,), (3, 1), (3, 1, 1)]


@pytest.mark.parametrize(
    "mu, r, expected", [(3, 2, (1, 0)), (1, 4, (0, 1)), (5, 4, (1, 1)), (9, 4, (2, 1))]
)
def test_spin_decomposition(mu, r, expected):
    floor, residue = spin_decomposition(mu, r)
    assert (floor, residue) == expected
    assert mu == r * floor + r - (2 * residue + 1)


@pytest.mark.parametrize("mu, r", [(2, 2), (3, 3), (0, 2)])
def test_spin_decomposition_rejects(mu, r):
    with pytest.raises(ValueError):
        spin_decomposition(mu, r)


def test_partition_is_canonical():
    assert Partition([1, 3, 1]) == Partition((3, 1, 1))
    assert hash(Partition([1, 3, 1])) == hash((3, 1, 1))
    assert repr(Partition([1, 3])) == "(3,1)"
    assert ones(3) == (1, 1, 1)


def test_partition_rejects_non_positive():
    with pytest.raises(ValueError, match="positive"):
        Partition([2, 0])


def test_partition_multiset_operations():
    mu = Partition((5, 3, 3, 1))
    assert mu.contains(Partition((3, 3)))
    assert not mu.contains(Partition((5, 5)))
    assert mu.difference(Partition((3, 1))) == (5, 3)
    assert mu.union([7]) == (7, 5, 3, 3, 1)
    with pytest.raises(ValueError):
        mu.difference(Partition((7,)))
