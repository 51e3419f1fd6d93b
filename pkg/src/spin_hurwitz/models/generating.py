"""Truncated generating series of disconnected spin Hurwitz numbers."""

from collections.abc import Mapping

from sympy import Rational

from spin_hurwitz.models.partition import EMPTY, Partition

# (t-exponent b, profile over zero, profile over infinity)
GeneratingKey = tuple[int, Partition, Partition]

CONSTANT_KEY: GeneratingKey = (0, EMPTY, EMPTY)


def divides(key: GeneratingKey, target: GeneratingKey) -> bool:
    """Whether the monomial ``key`` divides ``target``."""
    return key[0] <= target[0] and target[1].contains(key[1]) and target[2].contains(key[2])


class GeneratingSeries:
    """Coefficients of ``t^b p_mu q_nu`` in a series with constant term one.

    Attributes:
        degree (int): Truncation degree; only profiles with ``|mu| <= degree`` are stored.
        terms (dict[GeneratingKey, Rational]): Nonzero coefficients.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[GeneratingKey, object] | None = None) -> None:
        """Create the series.

        Raises:
            ValueError: If a key exceeds the truncation degree.
        """
        self.degree = degree
        self.terms: dict[GeneratingKey, Rational] = {}
        for (b, mu, nu), value in (terms or {}).items():
            mu, nu = Partition(mu), Partition(nu)
            if mu.size > degree or nu.size > degree:
                raise ValueError(f"Key ({b}, {mu!r}, {nu!r}) exceeds truncation degree {degree}")
            coefficient = Rational(value)
            if coefficient != 0:
                self.terms[(b, mu, nu)] = coefficient

    def coefficient(self, key: GeneratingKey) -> Rational:
        """Coefficient of a monomial (zero when absent)."""
        return self.terms.get(key, Rational(0))

    def multiply(self, other: "GeneratingSeries", target: GeneratingKey) -> "GeneratingSeries":
        """Product, keeping only the monomials that divide ``target``."""
        result: dict[GeneratingKey, Rational] = {}
        for (b1, mu1, nu1), c1 in self.terms.items():
            for (b2, mu2, nu2), c2 in other.terms.items():
                key = (b1 + b2, mu1.union(mu2), nu1.union(nu2))
                if divides(key, target):
                    result[key] = result.get(key, Rational(0)) + c1 * c2
        return GeneratingSeries(self.degree, result)

    def log_coefficient(self, target: GeneratingKey) -> Rational:
        """Coefficient of ``target`` in the formal logarithm.

        Raises:
            ValueError: If the constant term is not one or the target exceeds the degree.
        """
        if self.coefficient(CONSTANT_KEY) != 1:
            raise ValueError("log needs a series with constant term 1")
        if target[1].size > self.degree:
            raise ValueError(f"Target degree {target[1].size} exceeds truncation {self.degree}")
        reduced = GeneratingSeries(
            self.degree,
            {k: v for k, v in self.terms.items() if k != CONSTANT_KEY and divides(k, target)},
        )
        total = Rational(0)
        power = reduced
        k = 1
        while power.terms:
            sign = 1 if k % 2 else -1
            total += sign * power.coefficient(target) / k
            power = power.multiply(reduced, target)
            k += 1
        return total

    def __repr__(self) -> str:
        """Size summary."""
        return f"GeneratingSeries(degree={self.degree}, {len(self.terms)} terms)"
