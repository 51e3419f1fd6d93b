"""Partition value type and the partition classes used as index sets."""

from collections import Counter
from collections.abc import Iterable
from enum import Enum


class PartitionClass(str, Enum):
    """Flavor of partitions enumerated by ``services.partitions.enumerate_partitions``."""

    ALL = "all"
    ODD = "odd"
    STRICT = "strict"


class Partition(tuple[int, ...]):
    """An integer partition stored as a weakly decreasing tuple of positive parts.

    Any iterable of positive integers is accepted and sorted, so ``Partition([1, 3, 1])``
    and ``Partition((3, 1, 1))`` are the same (hashable) key.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        """Create a partition from its parts in any order.

        Args:
            parts: Positive integers.

        Raises:
            ValueError: If a part is not a positive integer.
        """
        values = sorted((int(p) for p in parts), reverse=True)
        if values and values[-1] < 1:
            raise ValueError(f"Partition parts must be positive, got {values}")
        return super().__new__(cls, values)

    def __repr__(self) -> str:
        """Return the parts in parentheses, e.g. ``(3,1,1)``."""
        return "(" + ",".join(str(p) for p in self) + ")"

    @property
    def size(self) -> int:
        """Sum of the parts."""
        return sum(self)

    @property
    def length(self) -> int:
        """Number of parts."""
        return len(self)

    @property
    def multiplicities(self) -> dict[int, int]:
        """Map from part to the number of times it occurs."""
        return dict(Counter(self))

    @property
    def is_odd(self) -> bool:
        """Whether every part is odd."""
        return all(p % 2 == 1 for p in self)

    @property
    def is_strict(self) -> bool:
        """Whether all parts are distinct."""
        return len(set(self)) == len(self)

    def belongs_to(self, flavor: PartitionClass) -> bool:
        """Check membership in a partition class.

        Args:
            flavor: The class to test.

        Returns:
            True if the partition is in the class.
        """
        if flavor is PartitionClass.ODD:
            return self.is_odd
        if flavor is PartitionClass.STRICT:
            return self.is_strict
        return True

    def union(self, other: Iterable[int]) -> "Partition":
        """Multiset union of the parts."""
        return Partition((*self, *other))

    def contains(self, other: "Partition") -> bool:
        """Whether ``other`` is a sub-multiset of this partition."""
        mine = Counter(self)
        return all(mine[p] >= k for p, k in Counter(other).items())

    def difference(self, other: "Partition") -> "Partition":
        """Multiset difference; ``other`` must be contained in this partition.

        Raises:
            ValueError: If ``other`` is not a sub-multiset.
        """
        remaining = Counter(self)
        remaining.subtract(Counter(other))
        if any(k < 0 for k in remaining.values()):
            raise ValueError(f"{other!r} is not contained in {self!r}")
        return Partition(remaining.elements())


EMPTY = Partition()


def ones(d: int) -> Partition:
    """Return the partition ``(1^d)``."""
    return Partition([1] * d)
