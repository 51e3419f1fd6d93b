"""Truncated polynomials in psi and kappa classes."""

from collections.abc import Iterator, Sequence
from functools import lru_cache

from sympy import Rational
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing, ring


@lru_cache(maxsize=None)
def class_ring(names: tuple[str, ...]) -> PolyRing:
    """Polynomial ring over ``QQ`` in the given class symbols."""
    return ring(",".join(names), QQ)[0]


def weighted_degree(monom: Sequence[int], weights: Sequence[int]) -> int:
    """Cohomological degree of a monomial, ``sum e_j w_j``."""
    return sum(e * w for e, w in zip(monom, weights))


def truncate(element: PolyElement, weights: Sequence[int], cap: int) -> tuple[PolyElement, bool]:
    """Drop the monomials of degree above ``cap``; the flag tells whether any was dropped."""
    kept = {m: c for m, c in element.items() if weighted_degree(m, weights) <= cap}
    return element.ring.from_dict(kept), len(kept) < len(element)


def truncated_exp(element: PolyElement, weights: Sequence[int], cap: int) -> PolyElement:
    """``exp(element)`` up to degree ``cap`` for an element without constant term.

    Raises:
        ValueError: If the element has a constant term.
    """
    if element.get(element.ring.zero_monom):
        raise ValueError("exp needs an element without constant term")
    result = element.ring.one
    term = element.ring.one
    for k in range(1, cap + 1):
        term, _ = truncate(term * element, weights, cap)
        term = term * QQ(1, k)
        if not term:
            break
        result += term
    return result


class TautExpression:
    """A polynomial in ``psi_1..psi_n`` and ``kappa_1..kappa_D`` on ``M_{g,n}-bar``.

    ``D = 3g - 3 + n`` is the dimension; products drop everything above it and record the fact
    in ``dropped``.

    Attributes:
        g (int): Genus.
        n (int): Number of markings.
        element (PolyElement): The polynomial.
        dropped (bool): Whether a truncation discarded nonzero terms.
    """

    __slots__ = ("g", "n", "element", "dropped")

    def __init__(
        self, g: int, n: int, element: PolyElement | None = None, dropped: bool = False
    ) -> None:
        """Create an expression, the zero class by default.

        Raises:
            ValueError: If ``(g, n)`` is unstable.
        """
        if 2 * g - 2 + n <= 0:
            raise ValueError(f"M_{{{g},{n}}} is unstable")
        self.g = g
        self.n = n
        base = self.ring(g, n)
        self.element = base.zero if element is None else element
        self.dropped = dropped

    @staticmethod
    def ring(g: int, n: int) -> PolyRing:
        """Ring of ``psi1..psin, kappa1..kappaD``."""
        names = tuple(f"psi{i}" for i in range(1, n + 1))
        names += tuple(f"kappa{m}" for m in range(1, 3 * g - 3 + n + 1))
        return class_ring(names)

    @property
    def dimension(self) -> int:
        """``3g - 3 + n``."""
        return 3 * self.g - 3 + self.n

    @property
    def weights(self) -> tuple[int, ...]:
        """Degrees of the generators: 1 for every psi, ``m`` for ``kappa_m``."""
        return (1,) * self.n + tuple(range(1, self.dimension + 1))

    @classmethod
    def constant(cls, g: int, n: int, value: object) -> "TautExpression":
        """A multiple of the fundamental class."""
        base = cls.ring(g, n)
        return cls(g, n, base.ground_new(QQ.convert(value)))

    @classmethod
    def monomial(
        cls, g: int, n: int, psi: Sequence[int], kappas: Sequence[int] = (), coeff: object = 1
    ) -> "TautExpression":
        """``coeff prod psi_i^{psi[i]} prod_j kappa_{kappas[j]}``.

        Raises:
            ValueError: If ``psi`` has the wrong length or a kappa index is not positive.
        """
        if len(psi) != n:
            raise ValueError(f"Need {n} psi exponents, got {list(psi)}")
        dimension = 3 * g - 3 + n
        kappa_exponents = [0] * dimension
        for m in kappas:
            if m < 1:
                raise ValueError(f"kappa indices start at 1, got {m}")
            if m > dimension:
                return cls(g, n, dropped=True)
            kappa_exponents[m - 1] += 1
        base = cls.ring(g, n)
        expr = cls(g, n, base.from_dict({tuple(psi) + tuple(kappa_exponents): QQ.convert(coeff)}))
        return expr.truncated()

    @classmethod
    def psi(cls, g: int, n: int, i: int) -> "TautExpression":
        """``psi_i`` with ``i`` from 1."""
        return cls.monomial(g, n, [int(j == i) for j in range(1, n + 1)])

    @classmethod
    def kappa(cls, g: int, n: int, m: int) -> "TautExpression":
        """``kappa_m``."""
        return cls.monomial(g, n, [0] * n, [m])

    def truncated(self) -> "TautExpression":
        """Drop the terms above the dimension."""
        element, dropped = truncate(self.element, self.weights, self.dimension)
        return TautExpression(self.g, self.n, element, self.dropped or dropped)

    def _check(self, other: "TautExpression") -> None:
        if (self.g, self.n) != (other.g, other.n):
            raise ValueError(f"M_{{{self.g},{self.n}}} and M_{{{other.g},{other.n}}} differ")

    def __add__(self, other: "TautExpression") -> "TautExpression":
        """Sum."""
        self._check(other)
        return TautExpression(
            self.g, self.n, self.element + other.element, self.dropped or other.dropped
        )

    def __mul__(self, other: "TautExpression | int | Rational") -> "TautExpression":
        """Product truncated at the dimension."""
        if not isinstance(other, TautExpression):
            return TautExpression(
                self.g, self.n, self.element * QQ.convert(other), self.dropped
            )
        self._check(other)
        product = TautExpression(
            self.g, self.n, self.element * other.element, self.dropped or other.dropped
        )
        return product.truncated()

    __rmul__ = __mul__

    def exp(self) -> "TautExpression":
        """Exponential of a class without degree-zero part."""
        return TautExpression(
            self.g,
            self.n,
            truncated_exp(self.element, self.weights, self.dimension),
            self.dropped,
        )

    def terms(self) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], Rational]]:
        """``(psi exponents, kappa indices with repetition, coefficient)`` for every monomial."""
        for monom, coeff in self.element.items():
            psi = tuple(monom[: self.n])
            kappas: list[int] = []
            for m, e in enumerate(monom[self.n :], start=1):
                kappas.extend([m] * e)
            yield psi, tuple(kappas), QQ.to_sympy(coeff)

    def __repr__(self) -> str:
        """Readable form."""
        return f"TautExpression(g={self.g}, n={self.n}, {self.element.as_expr()})"
