"""Exact scalars over the ramification points and truncated local series around them."""

from collections.abc import Iterable, Sequence

from sympy import Rational
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring


class TruncationError(ArithmeticError):
    """A local series was read beyond the precision it is known to."""


class ScalarRing:
    """``Q[a]/(a^{2s} - 1/(2s))``, optionally extended by polynomial spectator variables.

    The generator ``a`` stands for every root of ``a^{2s} = 1/(2s)`` at once, so the trace sums
    an element over all ramification points without choosing complex values.

    Attributes:
        s (int): Half of ``r``.
        names (tuple[str, ...]): Names of the spectator variables.
        ring (PolyRing): Sparse polynomial ring over QQ whose first generator is ``a``.
    """

    def __init__(self, s: int, names: Sequence[str] = ()) -> None:
        """Create the ring.

        Raises:
            ValueError: If ``s < 1``.
        """
        if s < 1:
            raise ValueError(f"s must be positive, got {s}")
        self.s = s
        self.names = tuple(names)
        self.ring = ring(",".join(("a", *self.names)), QQ)[0]
        self._gens = dict(zip(("a", *self.names), self.ring.gens))
        self._relation = QQ(1, 2 * s)

    @property
    def period(self) -> int:
        """Degree ``2s`` of the defining relation."""
        return 2 * self.s

    @property
    def zero(self) -> PolyElement:
        """Additive identity."""
        return self.ring.zero

    @property
    def one(self) -> PolyElement:
        """Multiplicative identity."""
        return self.ring.one

    def gen(self, name: str) -> PolyElement:
        """The generator ``a`` or a spectator variable.

        Raises:
            KeyError: If the name is not a generator of this ring.
        """
        return self._gens[name]

    def scalar(self, value: object) -> PolyElement:
        """A rational constant."""
        return self.ring(QQ.from_sympy(Rational(value)))  # type: ignore[arg-type]

    def reduce(self, element: PolyElement) -> PolyElement:
        """Rewrite every ``a^k`` with ``k >= 2s`` through ``a^{2s} = 1/(2s)``."""
        period = self.period
        if all(monom[0] < period for monom in element):
            return element
        terms: dict[tuple[int, ...], object] = {}
        for monom, coeff in element.items():
            quotient, k = divmod(monom[0], period)
            key = (k, *monom[1:])
            terms[key] = terms.get(key, QQ.zero) + coeff * self._relation**quotient
        return self.ring.from_dict({m: c for m, c in terms.items() if c})

    def inverse(self, element: PolyElement) -> PolyElement:
        """Inverse of a rational multiple of a power of ``a``.

        Raises:
            ArithmeticError: If the element is not such a monomial.
        """
        if len(element) != 1:
            raise ArithmeticError(f"Only monomials c*a^k are inverted here, got {element}")
        ((monom, coeff),) = element.items()
        if any(monom[1:]):
            raise ArithmeticError(f"Cannot invert spectator-dependent {element}")
        k = monom[0]
        m = -(-k // self.period)
        inverse_monom = (m * self.period - k,) + (0,) * len(self.names)
        return self.ring.from_dict({inverse_monom: QQ(self.period) ** m / coeff})

    def trace(self, element: PolyElement) -> PolyElement:
        """Sum over the ``2s`` conjugates of ``a``: ``2s`` times the ``a``-free part."""
        return self._a_free_part(element, self.period)

    def half_trace(self, element: PolyElement) -> PolyElement:
        """Sum over a system of representatives of ``a <-> -a``.

        Valid for elements whose value at ``a`` and ``-a`` agree, which the recursion
        guarantees for its residues.
        """
        return self._a_free_part(element, self.s)

    def _a_free_part(self, element: PolyElement, factor: int) -> PolyElement:
        reduced = self.reduce(element)
        return self.ring.from_dict({m: c * factor for m, c in reduced.items() if m[0] == 0})

    def embed(self, element: PolyElement, source: "ScalarRing") -> PolyElement:
        """Move an element of ``source`` into this ring, matching generators by name.

        Raises:
            KeyError: If ``source`` has a spectator this ring lacks.
        """
        positions = [0] + [1 + self.names.index(name) for name in source.names]
        width = 1 + len(self.names)
        terms = {}
        for monom, coeff in element.items():
            target = [0] * width
            for position, exponent in zip(positions, monom):
                target[position] = exponent
            terms[tuple(target)] = coeff
        return self.ring.from_dict(terms)


class AlgebraicScalar:
    """An element of ``Q[a]/(a^{2s} - 1/(2s))`` without spectator dependence.

    Attributes:
        s (int): Half of ``r``.
        coefficients (tuple[Rational, ...]): Coefficients of ``a^0, ..., a^{2s-1}``.
    """

    __slots__ = ("s", "coefficients")

    def __init__(self, s: int, coefficients: Iterable[object]) -> None:
        """Create the element from coefficients of ``a^0, a^1, ...`` (any length; reduced here)."""
        if s < 1:
            raise ValueError(f"s must be positive, got {s}")
        reduced = [Rational(0)] * (2 * s)
        for k, c in enumerate(coefficients):
            quotient, rest = divmod(k, 2 * s)
            reduced[rest] += Rational(c) / Rational(2 * s) ** quotient
        self.s = s
        self.coefficients = tuple(reduced)

    @classmethod
    def generator(cls, s: int) -> "AlgebraicScalar":
        """The element ``a``."""
        return cls(s, [0, 1])

    @classmethod
    def from_element(cls, scalars: ScalarRing, element: PolyElement) -> "AlgebraicScalar":
        """Read a spectator-free ring element.

        Raises:
            ValueError: If the element depends on a spectator variable.
        """
        values = [Rational(0)] * scalars.period
        for monom, coeff in scalars.reduce(element).items():
            if any(monom[1:]):
                raise ValueError(f"{element} depends on spectator variables")
            values[monom[0]] = QQ.to_sympy(coeff)
        return cls(scalars.s, values)

    def _check(self, other: "AlgebraicScalar") -> None:
        if other.s != self.s:
            raise ValueError(f"Cannot combine elements with s = {self.s} and s = {other.s}")

    def __add__(self, other: "AlgebraicScalar | object") -> "AlgebraicScalar":
        """Sum."""
        if not isinstance(other, AlgebraicScalar):
            other = AlgebraicScalar(self.s, [other])
        self._check(other)
        values = [x + y for x, y in zip(self.coefficients, other.coefficients)]
        return AlgebraicScalar(self.s, values)

    def __neg__(self) -> "AlgebraicScalar":
        """Negation."""
        return AlgebraicScalar(self.s, [-c for c in self.coefficients])

    def __sub__(self, other: "AlgebraicScalar | object") -> "AlgebraicScalar":
        """Difference."""
        if not isinstance(other, AlgebraicScalar):
            other = AlgebraicScalar(self.s, [other])
        return self + (-other)

    def __mul__(self, other: "AlgebraicScalar | object") -> "AlgebraicScalar":
        """Product, reduced through the relation."""
        if not isinstance(other, AlgebraicScalar):
            factor = Rational(other)  # type: ignore[arg-type]
            return AlgebraicScalar(self.s, [factor * c for c in self.coefficients])
        self._check(other)
        product = [Rational(0)] * (4 * self.s)
        for i, x in enumerate(self.coefficients):
            if x:
                for j, y in enumerate(other.coefficients):
                    product[i + j] += x * y
        return AlgebraicScalar(self.s, product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "AlgebraicScalar":
        """Integer power; negative powers need a monomial."""
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = AlgebraicScalar(self.s, [1])
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self) -> "AlgebraicScalar":
        """Inverse of ``c a^k``.

        Raises:
            ArithmeticError: If the element is not a nonzero monomial.
        """
        support = [k for k, c in enumerate(self.coefficients) if c != 0]
        if len(support) != 1:
            raise ArithmeticError(f"Only monomials c*a^k are inverted here, got {self!r}")
        k = support[0]
        m = 1 if k else 0
        values = [Rational(0)] * (2 * self.s)
        period = 2 * self.s
        values[(m * period - k) % period] = Rational(period) ** m / self.coefficients[k]
        return AlgebraicScalar(self.s, values)

    def trace(self) -> Rational:
        """Sum of the element over all ``2s`` roots of ``a^{2s} = 1/(2s)``."""
        return 2 * self.s * self.coefficients[0]

    def half_trace(self) -> Rational:
        """Sum over a system of representatives of ``a <-> -a``."""
        return self.s * self.coefficients[0]

    def __eq__(self, other: object) -> bool:
        """Equality of reduced forms (rationals compare as constants)."""
        if not isinstance(other, AlgebraicScalar):
            try:
                other = AlgebraicScalar(self.s, [other])
            except (TypeError, ValueError):
                return NotImplemented
        return self.s == other.s and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        """Hash of the reduced form."""
        return hash((self.s, self.coefficients))

    def __repr__(self) -> str:
        """Readable polynomial in ``a``."""
        terms = [f"{c}*a^{k}" if k else f"{c}" for k, c in enumerate(self.coefficients) if c != 0]
        return f"AlgebraicScalar(s={self.s}, {' + '.join(terms) or '0'})"


class LocalSeries:
    """A truncated Laurent series ``t^v (c_0 + c_1 t + ...) + O(t^p)`` in ``t = z - a``.

    Coefficients live in a ``ScalarRing``; ``p = v + len(coefficients)`` is the absolute
    precision and every arithmetic operation keeps it honest, so reading a coefficient at or
    beyond ``p`` raises ``TruncationError``.

    Attributes:
        scalars (ScalarRing): Coefficient ring.
        valuation (int): Exponent of the first stored coefficient.
        coefficients (list[PolyElement]): Reduced coefficients from ``t^valuation`` upwards.
    """

    __slots__ = ("scalars", "valuation", "coefficients")

    def __init__(
        self, scalars: ScalarRing, coefficients: Sequence[PolyElement], valuation: int = 0
    ) -> None:
        """Create the series; coefficients are reduced through the relation."""
        self.scalars = scalars
        self.valuation = valuation
        self.coefficients = [scalars.reduce(c) for c in coefficients]

    @classmethod
    def polynomial(
        cls, scalars: ScalarRing, coefficients: Sequence[PolyElement], precision: int
    ) -> "LocalSeries":
        """An exact polynomial in ``t``, declared known up to ``t^{precision-1}``."""
        padded = list(coefficients[:precision])
        padded += [scalars.zero] * (precision - len(padded))
        return cls(scalars, padded)

    @property
    def precision(self) -> int:
        """First exponent whose coefficient is unknown."""
        return self.valuation + len(self.coefficients)

    def coefficient(self, k: int) -> PolyElement:
        """Coefficient of ``t^k``.

        Raises:
            TruncationError: If ``k`` lies at or beyond the precision.
        """
        if k >= self.precision:
            raise TruncationError(f"[t^{k}] requested beyond precision {self.precision}")
        if k < self.valuation:
            return self.scalars.zero
        return self.coefficients[k - self.valuation]

    def scalar(self, k: int) -> AlgebraicScalar:
        """Coefficient of ``t^k`` as an ``AlgebraicScalar`` (spectator-free series only)."""
        return AlgebraicScalar.from_element(self.scalars, self.coefficient(k))

    def normalized(self) -> "LocalSeries":
        """Move leading zero coefficients into the valuation."""
        k = 0
        while k < len(self.coefficients) and not self.coefficients[k]:
            k += 1
        return LocalSeries(self.scalars, self.coefficients[k:], self.valuation + k)

    def _get(self, k: int) -> PolyElement:
        if k < self.valuation or k >= self.precision:
            return self.scalars.zero
        return self.coefficients[k - self.valuation]

    def __add__(self, other: "LocalSeries") -> "LocalSeries":
        """Sum, known up to the smaller precision."""
        low = min(self.valuation, other.valuation)
        high = min(self.precision, other.precision)
        return LocalSeries(
            self.scalars, [self._get(k) + other._get(k) for k in range(low, high)], low
        )

    def __neg__(self) -> "LocalSeries":
        """Negation."""
        return LocalSeries(self.scalars, [-c for c in self.coefficients], self.valuation)

    def __sub__(self, other: "LocalSeries") -> "LocalSeries":
        """Difference."""
        return self + (-other)

    def scale(self, factor: PolyElement) -> "LocalSeries":
        """Multiply by a ring element."""
        return LocalSeries(self.scalars, [factor * c for c in self.coefficients], self.valuation)

    def shift(self, k: int) -> "LocalSeries":
        """Multiply by ``t^k``."""
        return LocalSeries(self.scalars, self.coefficients, self.valuation + k)

    def __mul__(self, other: "LocalSeries") -> "LocalSeries":
        """Cauchy product, precision ``min(v_1 + p_2, v_2 + p_1)``."""
        a, b = self.normalized(), other.normalized()
        n = min(len(a.coefficients), len(b.coefficients))
        product = [self.scalars.zero] * n
        for i in range(n):
            x = a.coefficients[i]
            if not x:
                continue
            for j in range(n - i):
                y = b.coefficients[j]
                if y:
                    product[i + j] = product[i + j] + x * y
        return LocalSeries(self.scalars, product, a.valuation + b.valuation)

    def inverse(self) -> "LocalSeries":
        """Inverse of a series whose leading coefficient is a monomial in ``a``.

        Raises:
            ZeroDivisionError: If no known coefficient is nonzero.
            ArithmeticError: If the leading coefficient is not invertible.
        """
        s = self.normalized()
        if not s.coefficients:
            raise ZeroDivisionError("Inverse of a series with no known nonzero coefficient")
        c = s.coefficients
        lead = self.scalars.inverse(c[0])
        inverse = [lead]
        for k in range(1, len(c)):
            total = self.scalars.zero
            for i in range(1, k + 1):
                if c[i]:
                    total = total + c[i] * inverse[k - i]
            inverse.append(self.scalars.reduce(-lead * self.scalars.reduce(total)))
        return LocalSeries(self.scalars, inverse, -s.valuation)

    def __pow__(self, exponent: int) -> "LocalSeries":
        """Non-negative integer power."""
        if exponent < 0:
            return self.inverse() ** (-exponent)
        base = self.normalized()
        result = LocalSeries.polynomial(self.scalars, [self.scalars.one], len(base.coefficients))
        for _ in range(exponent):
            result = result * base
        return result

    def derivative(self) -> "LocalSeries":
        """Formal derivative ``d/dt``."""
        v = self.valuation
        coefficients = [(v + i) * c for i, c in enumerate(self.coefficients)]
        if v == 0:
            return LocalSeries(self.scalars, coefficients[1:], 0)
        return LocalSeries(self.scalars, coefficients, v - 1)

    def residue(self) -> PolyElement:
        """Coefficient of ``t^{-1}``.

        Raises:
            TruncationError: If the series is not known that far.
        """
        return self.coefficient(-1)

    def __repr__(self) -> str:
        """Valuation and precision summary."""
        return (
            f"LocalSeries(s={self.scalars.s}, valuation={self.valuation}, "
            f"precision={self.precision})"
        )
