"""Elements of the algebra Gamma = Q[p1, p3, p5, ...] in the power-sum basis."""

from collections.abc import Iterable, Mapping

from sympy import Rational

from spin_hurwitz.models.partition import EMPTY, Partition


class GammaElement:
    """A finite rational combination of power-sum monomials ``p_mu`` with ``mu`` odd.

    Zero coefficients are never stored. Multiplication can be restricted to the
    sub-multisets of a fixed partition, which is how single character columns are
    extracted without expanding whole Schur Q-functions.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, object] | None = None) -> None:
        """Build an element from a map ``mu -> coefficient``.

        Args:
            terms: Coefficients keyed by odd partitions; zero entries are dropped.

        Raises:
            ValueError: If a key is not an odd partition.
        """
        cleaned: dict[Partition, Rational] = {}
        for key, value in (terms or {}).items():
            mu = key if isinstance(key, Partition) else Partition(key)
            if not mu.is_odd:
                raise ValueError(f"Gamma is generated by odd power sums, got p_{mu!r}")
            coefficient = Rational(value)
            if coefficient != 0:
                cleaned[mu] = cleaned.get(mu, Rational(0)) + coefficient
        self.terms = {k: v for k, v in cleaned.items() if v != 0}

    @classmethod
    def one(cls) -> "GammaElement":
        """The unit ``p_()``."""
        return cls({EMPTY: 1})

    @classmethod
    def power_sum(cls, k: int) -> "GammaElement":
        """The generator ``p_k`` for odd ``k``."""
        return cls({Partition([k]): 1})

    def coefficient(self, mu: Iterable[int]) -> Rational:
        """Coefficient of ``p_mu`` (zero when absent)."""
        return self.terms.get(Partition(mu), Rational(0))

    @property
    def is_zero(self) -> bool:
        """Whether no term is stored."""
        return not self.terms

    def degrees(self) -> set[int]:
        """The set of sizes of the stored monomials."""
        return {mu.size for mu in self.terms}

    def __add__(self, other: "GammaElement") -> "GammaElement":
        """Sum of two elements."""
        result = dict(self.terms)
        for mu, c in other.terms.items():
            result[mu] = result.get(mu, Rational(0)) + c
        return GammaElement(result)

    def __neg__(self) -> "GammaElement":
        """Negation."""
        return GammaElement({mu: -c for mu, c in self.terms.items()})

    def __sub__(self, other: "GammaElement") -> "GammaElement":
        """Difference of two elements."""
        return self + (-other)

    def scale(self, factor: object) -> "GammaElement":
        """Multiply every coefficient by a rational factor."""
        f = Rational(factor)
        return GammaElement({mu: f * c for mu, c in self.terms.items()})

    def multiply(self, other: "GammaElement", within: Partition | None = None) -> "GammaElement":
        """Product in Gamma, optionally keeping only monomials contained in ``within``.

        Args:
            other: Right factor.
            within: If given, drop every product monomial that is not a sub-multiset of it.

        Returns:
            The (restricted) product.
        """
        result: dict[Partition, Rational] = {}
        left = self._restrict(within)
        right = other._restrict(within)
        for mu, a in left.items():
            for nu, b in right.items():
                key = mu.union(nu)
                if within is not None and not within.contains(key):
                    continue
                result[key] = result.get(key, Rational(0)) + a * b
        return GammaElement(result)

    def __mul__(self, other: "GammaElement") -> "GammaElement":
        """Unrestricted product in Gamma."""
        return self.multiply(other)

    def restrict(self, within: Partition) -> "GammaElement":
        """Keep only the monomials that are sub-multisets of ``within``."""
        return GammaElement(self._restrict(within))

    def substitute_scaled(self, factor: object) -> "GammaElement":
        """Substitute ``p_k -> factor * p_k``; ``factor = 1/2`` gives ``Q(p/2)`` from ``Q(p)``."""
        f = Rational(factor)
        return GammaElement({mu: c * f**mu.length for mu, c in self.terms.items()})

    def _restrict(self, within: Partition | None) -> dict[Partition, Rational]:
        if within is None:
            return self.terms
        return {mu: c for mu, c in self.terms.items() if within.contains(mu)}

    def __eq__(self, other: object) -> bool:
        """Equality of the stored terms."""
        if not isinstance(other, GammaElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        """Hash of the frozen term set."""
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        """Readable sum of terms, e.g. ``4/3*p(1,1,1) + 2/3*p(3)``."""
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*p{mu!r}" for mu, c in sorted(self.terms.items()))
