"""Enumeration and standard statistics of partitions."""

from functools import lru_cache
from itertools import product
from math import factorial, prod

from spin_hurwitz.models.partition import Partition, PartitionClass


def enumerate_partitions(d: int, flavor: PartitionClass = PartitionClass.ALL) -> list[Partition]:
    """List all partitions of ``d`` in a class, in reverse-lexicographic order.

    Args:
        d: The size, non-negative.
        flavor: Restrict to odd or strict partitions.

    Returns:
        Every partition of ``d`` in the class exactly once; ``[()]`` for ``d = 0``.

    Raises:
        ValueError: If ``d`` is negative.
    """
    if d < 0:
        raise ValueError(f"Partition size must be non-negative, got {d}")
    return list(_enumerate_cached(d, PartitionClass(flavor)))


@lru_cache(maxsize=None)
def _enumerate_cached(d: int, flavor: PartitionClass) -> tuple[Partition, ...]:
    return tuple(Partition(parts) for parts in _generate(d, d, flavor))


def _generate(remaining: int, largest: int, flavor: PartitionClass) -> list[tuple[int, ...]]:
    if remaining == 0:
        return [()]
    result: list[tuple[int, ...]] = []
    for part in range(min(remaining, largest), 0, -1):
        if flavor is PartitionClass.ODD and part % 2 == 0:
            continue
        bound = part - 1 if flavor is PartitionClass.STRICT else part
        result.extend((part, *tail) for tail in _generate(remaining - part, bound, flavor))
    return result


def z_factor(mu: Partition) -> int:
    """Return ``z_mu = prod_k m_k! k^{m_k}``, the order of the centralizer of cycle type mu."""
    return prod(factorial(m) * k**m for k, m in mu.multiplicities.items())


def aut_order(mu: Partition) -> int:
    """Return ``|Aut mu| = prod_k m_k!``."""
    return prod(factorial(m) for m in mu.multiplicities.values())


def parity_delta(lam: Partition) -> int:
    """Return ``delta(lambda) = l(lambda) mod 2`` for a strict partition.

    Raises:
        ValueError: If ``lam`` is not strict.
    """
    if not lam.is_strict:
        raise ValueError(f"parity_delta needs a strict partition, got {lam!r}")
    return lam.length % 2


def power_sum_eval(lam: Partition, k: int) -> int:
    """Evaluate the power sum ``p_k(lambda) = sum_i lambda_i^k``."""
    return sum(part**k for part in lam)


def sub_multisets(mu: Partition) -> list[Partition]:
    """List every sub-multiset of the parts of ``mu`` (including the empty one and mu itself)."""
    items = sorted(mu.multiplicities.items(), reverse=True)
    result = []
    for counts in product(*(range(m + 1) for _, m in items)):
        parts = [k for (k, _), c in zip(items, counts, strict=True) for _ in range(c)]
        result.append(Partition(parts))
    return sorted(result, key=lambda p: (p.size, p))


@lru_cache(maxsize=None)
def partition_count(d: int) -> int:
    """Count partitions of ``d`` with Euler's pentagonal number recursion."""
    if d < 0:
        return 0
    if d == 0:
        return 1
    total = 0
    k = 1
    while True:
        first = k * (3 * k - 1) // 2
        if first > d:
            break
        sign = 1 if k % 2 == 1 else -1
        total += sign * partition_count(d - first)
        second = k * (3 * k + 1) // 2
        if second <= d:
            total += sign * partition_count(d - second)
        k += 1
    return total


def spin_decomposition(mu: int, r: int) -> tuple[int, int]:
    """Write an odd ``mu`` as ``r [mu] + r - (2 <mu> + 1)`` with ``0 <= <mu> < r/2``.

    Returns:
        The pair ``([mu], <mu>)``.

    Raises:
        ValueError: If ``mu`` is not a positive odd integer or ``r`` is not positive and even.
    """
    if mu <= 0 or mu % 2 == 0:
        raise ValueError(f"Expected a positive odd part, got {mu}")
    if r <= 0 or r % 2:
        raise ValueError(f"r must be positive and even, got {r}")
    residue = (-(mu + 1) % r) // 2
    return (mu + 2 * residue + 1) // r - 1, residue
