"""Truncated power and Laurent series with exact rational coefficients."""

from collections.abc import Callable, Mapping, Sequence

from sympy import Rational, factorial


class TruncatedSeries:
    """A univariate series ``z^v (c_0 + c_1 z + ... + c_{N-1} z^{N-1}) + O(z^{v+N})``.

    ``v`` is the valuation shift (negative for a pole) and ``v + N`` the absolute precision:
    every coefficient of exponent below it is exact, nothing above it is known.

    Attributes:
        valuation (int): Exponent of the first stored coefficient.
        coefficients (list[Rational]): Stored coefficients from ``z^valuation`` upwards.
        variable (str): Display name of the variable.
    """

    __slots__ = ("valuation", "coefficients", "variable")

    def __init__(
        self, coefficients: Sequence[object], valuation: int = 0, variable: str = "z"
    ) -> None:
        """Create a series from its leading coefficients.

        Args:
            coefficients: Coefficients of ``z^valuation, z^(valuation+1), ...``.
            valuation: Exponent of the first coefficient.
            variable: Display name.
        """
        self.coefficients = [Rational(c) for c in coefficients]
        self.valuation = valuation
        self.variable = variable

    @classmethod
    def from_function(
        cls, term: Callable[[int], object], order: int, variable: str = "z"
    ) -> "TruncatedSeries":
        """Series with ``[z^k] = term(k)`` for ``0 <= k <= order``."""
        return cls([term(k) for k in range(order + 1)], variable=variable)

    @classmethod
    def exponential(cls, rate: object, order: int, variable: str = "z") -> "TruncatedSeries":
        """``exp(rate * z)`` to ``z^order``."""
        a = Rational(rate)
        return cls.from_function(lambda k: a**k / factorial(k), order, variable)

    @property
    def precision(self) -> int:
        """First exponent whose coefficient is unknown."""
        return self.valuation + len(self.coefficients)

    @property
    def order(self) -> int:
        """Highest exponent with a known coefficient."""
        return self.precision - 1

    def coefficient(self, k: int) -> Rational:
        """Coefficient of ``z^k``.

        Raises:
            ArithmeticError: If ``k`` lies beyond the known precision.
        """
        if k >= self.precision:
            raise ArithmeticError(
                f"[{self.variable}^{k}] requested beyond precision {self.precision}"
            )
        if k < self.valuation:
            return Rational(0)
        return self.coefficients[k - self.valuation]

    def truncate(self, order: int) -> "TruncatedSeries":
        """Forget every coefficient above ``z^order``."""
        keep = max(0, min(len(self.coefficients), order + 1 - self.valuation))
        return TruncatedSeries(self.coefficients[:keep], self.valuation, self.variable)

    def _aligned(self, other: "TruncatedSeries") -> tuple[int, int]:
        return min(self.valuation, other.valuation), min(self.precision, other.precision)

    def __add__(self, other: "TruncatedSeries | object") -> "TruncatedSeries":
        """Sum, known up to the smaller precision."""
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries([other], variable=self.variable).pad(self.order)
        low, high = self._aligned(other)
        return TruncatedSeries(
            [self._get(k) + other._get(k) for k in range(low, high)], low, self.variable
        )

    def __radd__(self, other: object) -> "TruncatedSeries":
        """Scalar plus series."""
        return self + other

    def __neg__(self) -> "TruncatedSeries":
        """Negation."""
        return self.scale(-1)

    def __sub__(self, other: "TruncatedSeries | object") -> "TruncatedSeries":
        """Difference."""
        if not isinstance(other, TruncatedSeries):
            return self + (-Rational(other))  # type: ignore[arg-type]
        return self + (-other)

    def _get(self, k: int) -> Rational:
        if k < self.valuation or k >= self.precision:
            return Rational(0)
        return self.coefficients[k - self.valuation]

    def pad(self, order: int) -> "TruncatedSeries":
        """Declare the coefficients up to ``z^order`` exactly known (zeros appended)."""
        missing = order + 1 - self.precision
        return TruncatedSeries(
            self.coefficients + [Rational(0)] * max(0, missing), self.valuation, self.variable
        )

    def scale(self, factor: object) -> "TruncatedSeries":
        """Multiply by a rational constant."""
        f = Rational(factor)
        return TruncatedSeries([f * c for c in self.coefficients], self.valuation, self.variable)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``z^k``."""
        return TruncatedSeries(self.coefficients, self.valuation + k, self.variable)

    def __mul__(self, other: "TruncatedSeries | object") -> "TruncatedSeries":
        """Cauchy product; relative precision is the smaller of the two."""
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        n = min(len(self.coefficients), len(other.coefficients))
        a, b = self.coefficients, other.coefficients
        product = [
            sum((a[i] * b[k - i] for i in range(k + 1) if a[i] != 0 and b[k - i] != 0), Rational(0))
            for k in range(n)
        ]
        return TruncatedSeries(product, self.valuation + other.valuation, self.variable)

    def __rmul__(self, other: object) -> "TruncatedSeries":
        """Scalar times series."""
        return self.scale(other)

    def normalized(self) -> "TruncatedSeries":
        """Drop leading zero coefficients, moving them into the valuation."""
        k = 0
        while k < len(self.coefficients) and self.coefficients[k] == 0:
            k += 1
        return TruncatedSeries(self.coefficients[k:], self.valuation + k, self.variable)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse of a series with invertible leading coefficient.

        Raises:
            ZeroDivisionError: If every known coefficient vanishes.
        """
        s = self.normalized()
        if not s.coefficients:
            raise ZeroDivisionError("Inverse of a series with no known nonzero coefficient")
        c = s.coefficients
        inv = [1 / c[0]]
        for k in range(1, len(c)):
            inv.append(-sum((c[i] * inv[k - i] for i in range(1, k + 1)), Rational(0)) / c[0])
        return TruncatedSeries(inv, -s.valuation, self.variable)

    def __truediv__(self, other: "TruncatedSeries | object") -> "TruncatedSeries":
        """Quotient of series (or by a rational constant)."""
        if not isinstance(other, TruncatedSeries):
            return self.scale(1 / Rational(other))  # type: ignore[arg-type]
        return self * other.inverse()

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        """Integer power by repeated squaring (negative powers go through the inverse)."""
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if exponent == 0:
            return TruncatedSeries([1], 0, self.variable).pad(len(self.coefficients) - 1)
        base = self
        result: TruncatedSeries | None = None
        while exponent:
            if exponent & 1:
                result = base if result is None else result * base
            exponent >>= 1
            if exponent:
                base = base * base
        assert result is not None
        return result

    def derivative(self) -> "TruncatedSeries":
        """Formal derivative ``d/dz``."""
        v = self.valuation
        return TruncatedSeries(
            [(v + i) * c for i, c in enumerate(self.coefficients)][(1 if v == 0 else 0) :],
            v - 1 if v != 0 else 0,
            self.variable,
        )

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Substitute ``z -> inner`` for a power series ``inner`` with zero constant term.

        Raises:
            ValueError: If this series has a pole or ``inner`` has a constant term.
        """
        if self.valuation < 0:
            raise ValueError("compose needs a power series on the outside")
        inner = inner.normalized()
        if inner.valuation < 1:
            raise ValueError("compose needs an inner series without constant term")
        order = self._compose_order(inner)
        result = TruncatedSeries([0], 0, self.variable).pad(order)
        power = TruncatedSeries([1], 0, self.variable).pad(order)
        for k in range(0, self.precision):
            if k * inner.valuation > order:
                break
            c = self._get(k)
            if c != 0:
                result = result + (power * c).truncate(order).pad(order)
            power = (power * inner).truncate(order).pad(order)
        return result.truncate(order)

    def _compose_order(self, inner: "TruncatedSeries") -> int:
        # first missing outer term starts at z^{v P}; inner errors enter at inner.precision
        outer_bound = inner.valuation * self.precision - 1
        inner_bound = inner.precision - 1
        return min(outer_bound, inner_bound)

    def exp(self) -> "TruncatedSeries":
        """Exponential of a power series with zero constant term.

        Raises:
            ValueError: If the constant term is nonzero or there is a pole.
        """
        if self.valuation < 0 or self._get(0) != 0:
            raise ValueError("exp needs a series with zero constant term")
        n = self.precision
        d = [k * self._get(k) for k in range(n)]
        e = [Rational(1)]
        for k in range(1, n):
            e.append(sum((d[i] * e[k - i] for i in range(1, k + 1)), Rational(0)) / k)
        return TruncatedSeries(e, 0, self.variable)

    def log(self) -> "TruncatedSeries":
        """Logarithm of a power series with constant term one.

        Raises:
            ValueError: If the constant term is not one.
        """
        if self.valuation < 0 or self._get(0) != 1:
            raise ValueError("log needs a series with constant term 1")
        n = self.precision
        a = [self._get(k) for k in range(n)]
        l_coeffs = [Rational(0)] * n
        # a' = a * l'  =>  k a_k = sum_{i=1}^{k} i l_i a_{k-i}
        for k in range(1, n):
            total = k * a[k] - sum((i * l_coeffs[i] * a[k - i] for i in range(1, k)), Rational(0))
            l_coeffs[k] = total / k
        return TruncatedSeries(l_coeffs, 0, self.variable)

    def power(self, alpha: object) -> "TruncatedSeries":
        """Rational power of a series with constant term one, ``exp(alpha log f)``."""
        return (self.log() * Rational(alpha)).exp()  # type: ignore[arg-type]

    def __eq__(self, other: object) -> bool:
        """Equality of the known coefficients on the common precision."""
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        low, high = self._aligned(other)
        return all(self._get(k) == other._get(k) for k in range(low, high))

    def __hash__(self) -> int:
        """Hash of the normalized coefficients."""
        s = self.normalized()
        return hash((s.valuation, tuple(s.coefficients)))

    def __repr__(self) -> str:
        """Readable truncated expansion."""
        terms = [
            f"{c}*{self.variable}^{self.valuation + i}"
            for i, c in enumerate(self.coefficients)
            if c != 0
        ]
        return (" + ".join(terms) or "0") + f" + O({self.variable}^{self.precision})"


class SparseSeries:
    """A multivariate series stored as a sparse map from exponent tuples to rationals.

    Attributes:
        variables (tuple[str, ...]): Variable names.
        order (int): Largest total degree represented.
        terms (dict[tuple[int, ...], Rational]): Nonzero coefficients.
    """

    __slots__ = ("variables", "order", "terms")

    def __init__(
        self,
        variables: Sequence[str],
        order: int,
        terms: Mapping[tuple[int, ...], object] | None = None,
    ) -> None:
        """Create the series, dropping zeros and terms above ``order``."""
        self.variables = tuple(variables)
        self.order = order
        self.terms = {
            tuple(k): Rational(v)
            for k, v in (terms or {}).items()
            if Rational(v) != 0 and sum(k) <= order
        }

    def coefficient(self, exponents: Sequence[int]) -> Rational:
        """Coefficient of a monomial (zero when absent)."""
        return self.terms.get(tuple(exponents), Rational(0))

    def __repr__(self) -> str:
        """Readable list of terms."""
        return f"SparseSeries({self.variables}, order={self.order}, {len(self.terms)} terms)"
