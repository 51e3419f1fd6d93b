"""Correlators of the spin Hurwitz spectral curve as exact rational multidifferentials."""

from collections.abc import Iterator, Mapping
from functools import lru_cache
from itertools import permutations

from sympy import Expr, Rational, Symbol, cancel, symbols
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing, ring


@lru_cache(maxsize=None)
def numerator_ring(n: int) -> PolyRing:
    """Polynomial ring ``QQ[z1, ..., zn]`` holding correlator numerators."""
    return ring(",".join(f"z{i}" for i in range(1, n + 1)), QQ)[0]


def d_polynomial(s: int, n: int, i: int) -> PolyElement:
    """``D(z_i) = 1 - 2s z_i^{2s}`` in the numerator ring of ``n`` variables (``i`` from 1)."""
    monom = tuple(2 * s if j == i else 0 for j in range(1, n + 1))
    return numerator_ring(n).from_dict({(0,) * n: QQ.one, monom: QQ(-2 * s)})


class Correlator:
    """``omega_{g,n}`` as ``N(z_1..z_n) / prod_i D(z_i)^{e_i} dz_1 ... dz_n``.

    Stable correlators keep the exponents ``e_i`` minimal, so they are the pole orders at the
    ramification points. The unstable ``(0,1)`` and ``(0,2)`` correlators have closed forms:
    ``y dx = D(z_1) dz_1`` and ``scale/2 (1/(z_1-z_2)^2 + 1/(z_1+z_2)^2) dz_1 dz_2``.

    Attributes:
        g (int): Genus.
        n (int): Number of variables.
        s (int): Half of ``r``.
        numerator (PolyElement | None): ``N`` for stable correlators.
        exponents (tuple[int, ...]): Pole orders ``e_i`` for stable correlators.
        scale (Rational): Factor in front of the bidifferential of the ``(0,2)`` form.
    """

    __slots__ = ("g", "n", "s", "numerator", "exponents", "scale")

    def __init__(
        self,
        g: int,
        n: int,
        s: int,
        numerator: PolyElement | None = None,
        exponents: tuple[int, ...] = (),
        scale: object = 1,
    ) -> None:
        """Create a correlator from its parts (use the constructors below)."""
        self.g = g
        self.n = n
        self.s = s
        self.numerator = numerator
        self.exponents = tuple(exponents)
        self.scale = Rational(scale)  # type: ignore[arg-type]

    @classmethod
    def unstable(cls, g: int, n: int, s: int, scale: object = 1) -> "Correlator":
        """The closed ``(0,1)`` or ``(0,2)`` form.

        Raises:
            ValueError: If ``(g, n)`` is stable.
        """
        if (g, n) not in ((0, 1), (0, 2)):
            raise ValueError(f"({g},{n}) is not an unstable correlator")
        return cls(g, n, s, scale=scale)

    @classmethod
    def from_inverse_powers(
        cls, g: int, n: int, s: int, terms: Mapping[tuple[int, ...], object]
    ) -> "Correlator":
        """Build a stable correlator from ``sum c prod z_i^{m_i} D(z_i)^{-k_i}``.

        Every ``D`` factor the resulting numerator still contains is cancelled.

        Args:
            g: Genus.
            n: Number of variables.
            s: Half of ``r``.
            terms: Map ``(m_1, ..., m_n, k_1, ..., k_n) -> c``.
        """
        zring = numerator_ring(n)
        exponents = [max((key[n + i] for key in terms), default=0) for i in range(n)]
        grouped: dict[tuple[int, ...], dict[tuple[int, ...], object]] = {}
        for key, c in terms.items():
            grouped.setdefault(tuple(key[n:]), {})[tuple(key[:n])] = QQ.convert(c)
        d_polys = [d_polynomial(s, n, i) for i in range(1, n + 1)]
        numerator = zring.zero
        for powers, monomials in grouped.items():
            part = zring.from_dict(monomials)
            for i, k in enumerate(powers):
                part = part * d_polys[i] ** (exponents[i] - k)
            numerator = numerator + part
        for i in range(n):
            while exponents[i] > 0 and numerator:
                quotient, remainder = numerator.div(d_polys[i])
                if remainder:
                    break
                numerator = quotient
                exponents[i] -= 1
        if not numerator:
            exponents = [0] * n
        return cls(g, n, s, numerator, tuple(exponents))

    @property
    def is_stable(self) -> bool:
        """Whether ``2g - 2 + n > 0``."""
        return 2 * self.g - 2 + self.n > 0

    @property
    def variables(self) -> tuple[Symbol, ...]:
        """The symbols ``z1, ..., zn``."""
        return tuple(symbols(f"z1:{self.n + 1}"))

    def terms(self) -> Iterator[tuple[tuple[int, ...], Rational]]:
        """Numerator monomials as ``(exponents, coefficient)`` pairs."""
        if self.numerator is None:
            raise ValueError(f"({self.g},{self.n}) has no numerator")
        for monom, coeff in self.numerator.items():
            yield monom, QQ.to_sympy(coeff)

    def as_expr(self) -> Expr:
        """The coefficient of ``dz_1 ... dz_n`` as a sympy expression."""
        z = self.variables
        d = [1 - 2 * self.s * zi ** (2 * self.s) for zi in z]
        if self.numerator is None:
            if self.n == 1:
                return d[0]
            return self.scale / 2 * (1 / (z[0] - z[1]) ** 2 + 1 / (z[0] + z[1]) ** 2)
        expr = self.numerator.as_expr(*z)
        for di, e in zip(d, self.exponents):
            expr = expr / di**e
        return expr

    def scaled(self, factor: object) -> "Correlator":
        """The correlator multiplied by a rational constant."""
        f = Rational(factor)  # type: ignore[arg-type]
        if self.numerator is None:
            return Correlator(self.g, self.n, self.s, scale=self.scale * f)
        return Correlator(
            self.g, self.n, self.s, self.numerator * QQ.from_sympy(f), self.exponents
        )

    def is_equivariant(self) -> bool:
        """Whether the form changes sign under ``z_i -> -z_i`` in each variable separately.

        The coefficient of ``dz_1 ... dz_n`` must then be even in every ``z_i``.
        """
        if self.numerator is None:
            return True
        return all(all(m % 2 == 0 for m in monom) for monom in self.numerator)

    def is_symmetric(self) -> bool:
        """Whether the correlator is invariant under permutations of its variables."""
        if self.numerator is None:
            return True
        if len(set(self.exponents)) > 1:
            return False
        terms = dict(self.numerator.items())
        for perm in permutations(range(self.n)):
            permuted = {tuple(monom[p] for p in perm): c for monom, c in terms.items()}
            if permuted != terms:
                return False
        return True

    def __eq__(self, other: object) -> bool:
        """Equality as rational functions."""
        if not isinstance(other, Correlator):
            return NotImplemented
        if (self.g, self.n, self.s) != (other.g, other.n, other.s):
            return False
        return cancel(self.as_expr() - other.as_expr()) == 0

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        """Short summary."""
        if self.numerator is None:
            return f"Correlator(g={self.g}, n={self.n}, s={self.s}, closed form)"
        return (
            f"Correlator(g={self.g}, n={self.n}, s={self.s}, "
            f"{len(self.numerator)} terms, poles={self.exponents})"
        )
