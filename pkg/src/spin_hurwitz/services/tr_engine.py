"""Topological recursion on the spin Hurwitz spectral curve.

The curve is ``x = log z - z^{2s}``, ``y = z`` with the bidifferential
``B = 1/2 (1/(z_1 - z_2)^2 + 1/(z_1 + z_2)^2) dz_1 dz_2``. Its ``2s`` ramification points are the
roots of ``a^{2s} = 1/(2s)``. Each residue is computed once at a generic root ``a`` in the ring
``Q[a]/(a^{2s} - 1/(2s))`` and summed over all roots by the trace. Spectator variables enter
through ``p_i = 1/(z_i - a)`` and ``q_i = 1/(z_i + a)``, which are rewritten at the end as
polynomials in ``a`` and ``z_i`` over ``D(z_i) = 1 - 2s z_i^{2s}``.
"""

from collections.abc import Mapping, Sequence
from functools import lru_cache
from itertools import combinations, product
from math import comb, prod

from loguru import logger
from sympy import Rational
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from spin_hurwitz.config import load_settings
from spin_hurwitz.models.algebraic import LocalSeries, ScalarRing, TruncationError
from spin_hurwitz.models.correlator import Correlator
from spin_hurwitz.models.hurwitz import HurwitzQuery
from spin_hurwitz.models.partition import Partition
from spin_hurwitz.models.reports import ConjectureReport
from spin_hurwitz.models.series import TruncatedSeries
from spin_hurwitz.services.closed_forms import f01_series, f02_series, inversion_power_series
from spin_hurwitz.services.hurwitz_numbers import connected

CorrelatorKey = tuple[int, int]

# Local point a correlator variable is evaluated at: the integration point, its involution
# image, or a spectator index.
Slot = str | int

LOCAL_POINT = "z"
INVOLUTION_POINT = "sigma"


def _half(r: int) -> int:
    if r <= 0 or r % 2:
        raise ValueError(f"r must be a positive even integer, got {r}")
    return r // 2


def _require_stable(g: int, n: int) -> None:
    if g < 0 or n < 1 or 2 * g - 2 + n <= 0:
        raise ValueError(f"({g},{n}) is not a stable correlator")


def pole_order(g: int, n: int) -> int:
    """Pole order ``6g - 4 + 2n`` of a stable correlator in each variable at ramification."""
    return 6 * g - 4 + 2 * n


def _factor_pole(key: CorrelatorKey) -> int:
    return 0 if key == (0, 2) else pole_order(*key)


def _splits(g: int, n: int) -> list[tuple[int, tuple[int, ...], int, tuple[int, ...]]]:
    """Ordered splittings ``(g_1, I, g_2, J)`` of the bracket, ``(0,1)`` factors excluded."""
    spectators = tuple(range(2, n + 1))
    splits = []
    for g1 in range(g + 1):
        for size in range(len(spectators) + 1):
            for subset in combinations(spectators, size):
                rest = tuple(i for i in spectators if i not in subset)
                if (g1, len(subset)) == (0, 0) or (g - g1, len(rest)) == (0, 0):
                    continue
                splits.append((g1, subset, g - g1, rest))
    return splits


def bracket_pole_order(g: int, n: int) -> int:
    """Largest pole order at ``a`` among the terms of the recursion bracket for ``omega_{g,n}``."""
    _require_stable(g, n)
    orders = [
        _factor_pole((g1, 1 + len(left))) + _factor_pole((g2, 1 + len(right)))
        for g1, left, g2, right in _splits(g, n)
    ]
    if g >= 1:
        orders.append(2 if (g - 1, n + 1) == (0, 2) else 2 * pole_order(g - 1, n + 1))
    return max(orders)


def working_order(g: int, n: int, margin: int | None = None) -> int:
    """Local precision allocated to the residue computation for ``omega_{g,n}``.

    The kernel costs three orders on top of the bracket pole; ``margin`` (by default
    ``Settings.truncation_margin``) is added on top.
    """
    if margin is None:
        margin = load_settings().truncation_margin
    if margin < 0:
        raise ValueError(f"Truncation margin must be non-negative, got {margin}")
    return bracket_pole_order(g, n) + 3 + margin


# Local data at the generic ramification point


@lru_cache(maxsize=None)
def _base_ring(s: int) -> ScalarRing:
    return ScalarRing(s)


def _x_coefficients(scalars: ScalarRing, order: int) -> list[PolyElement]:
    """Taylor coefficients of ``x(a + t) - x(a)`` up to ``t^{order-1}``."""
    s = scalars.s
    a = scalars.gen("a")
    a_inverse = scalars.inverse(a)
    coefficients = [scalars.zero]
    for k in range(1, order):
        c = scalars.reduce(a_inverse**k) * QQ((-1) ** (k + 1), k)
        if k <= 2 * s:
            c = c - comb(2 * s, k) * a ** (2 * s - k)
        coefficients.append(scalars.reduce(c))
    return coefficients


def _evaluate(coefficients: Sequence[PolyElement], u: LocalSeries, precision: int) -> LocalSeries:
    """``sum_k c_k u^k`` for ``u`` without constant term."""
    scalars = u.scalars
    total = LocalSeries.polynomial(scalars, [coefficients[0]], precision)
    power = LocalSeries.polynomial(scalars, [scalars.one], precision)
    for c in coefficients[1:]:
        power = power * u
        if power.normalized().valuation >= precision:
            break
        if c:
            total = total + power.scale(c)
    return total


@lru_cache(maxsize=None)
def _involution_tail(s: int, order: int) -> tuple[PolyElement, ...]:
    """Coefficients of ``sigma(a + t) - a`` from ``t^0`` to ``t^{order-1}``."""
    scalars = _base_ring(s)
    x = _x_coefficients(scalars, order + 1)
    step = scalars.inverse(scalars.reduce(2 * x[2]))
    tail = [scalars.zero, -scalars.one]
    for m in range(2, order):
        approximation = LocalSeries.polynomial(scalars, tail, m + 2)
        value = _evaluate(x, approximation, m + 2)
        tail.append(scalars.reduce((value.coefficient(m + 1) - x[m + 1]) * step))
    return tuple(tail[:order])


def involution_series(s: int, order: int) -> LocalSeries:
    """The local Galois involution ``sigma(z)`` around the generic ramification point ``a``.

    Solves ``x(sigma(z)) = x(z)``, ``sigma(a) = a``, ``sigma != id`` order by order; the result
    is ``a - t + sigma_2 t^2 + ...`` in ``t = z - a``, known up to ``t^{order-1}``.

    Raises:
        ValueError: If ``order < 2``.
    """
    if order < 2:
        raise ValueError(f"order must be at least 2, got {order}")
    scalars = _base_ring(s)
    tail = list(_involution_tail(s, order))
    tail[0] = scalars.gen("a")
    return LocalSeries.polynomial(scalars, tail, order)


def involution_defect(s: int, order: int) -> LocalSeries:
    """``x(sigma(z)) - x(z)`` around ``a``; vanishes to the given order."""
    scalars = _base_ring(s)
    x = _x_coefficients(scalars, order)
    tail = LocalSeries(scalars, list(_involution_tail(s, order)))
    t = LocalSeries.polynomial(scalars, [scalars.zero, scalars.one], order)
    return _evaluate(x, tail, order) - _evaluate(x, t, order)


class _LocalExpansion:
    """Series at ``t = z - a`` shared by the terms of one recursion step."""

    def __init__(self, scalars: ScalarRing, order: int, scale: Rational) -> None:
        self.scalars = scalars
        self.order = order
        self.scale = scale
        base = _base_ring(scalars.s)
        a = scalars.gen("a")
        tail = [scalars.embed(c, base) for c in _involution_tail(scalars.s, order)]
        self.t = LocalSeries.polynomial(scalars, [scalars.zero, scalars.one], order)
        self.tilde = LocalSeries(scalars, tail)
        self.points = {
            LOCAL_POINT: LocalSeries.polynomial(scalars, [a, scalars.one], order),
            INVOLUTION_POINT: LocalSeries(scalars, [a, *tail[1:]]),
        }
        x = [scalars.embed(c, base) for c in _x_coefficients(base, order)]
        self.x_prime = LocalSeries.polynomial(
            scalars, [k * c for k, c in enumerate(x)][1:], order - 1
        )
        self.jacobian = self.tilde.derivative()
        self._powers: dict[tuple[str, int], LocalSeries] = {}
        self._inverse_d: dict[str, LocalSeries] = {}

    def one(self) -> LocalSeries:
        return LocalSeries.polynomial(self.scalars, [self.scalars.one], self.order)

    def zero(self) -> LocalSeries:
        return LocalSeries.polynomial(self.scalars, [], self.order)

    def power(self, name: str, k: int) -> LocalSeries:
        """``w^k`` for ``w`` one of ``t``, ``tilde`` (= sigma - a), ``z``, ``sigma``."""
        if k == 0:
            return self.one()
        key = (name, k)
        if key not in self._powers:
            base = {"t": self.t, "tilde": self.tilde}.get(name) or self.points[name]
            self._powers[key] = self.power(name, k - 1) * base
        return self._powers[key]

    def inverse_d(self, point: str) -> LocalSeries:
        """``1/D(w)`` at ``w = z`` or ``w = sigma``; a simple pole at ``t = 0``."""
        if point not in self._inverse_d:
            s = self.scalars.s
            d = self.one() - self.power(point, 2 * s).scale(self.scalars.scalar(2 * s))
            self._inverse_d[point] = d.normalized().inverse()
        return self._inverse_d[point]

    def kernel(self) -> LocalSeries:
        """Recursion kernel ``K(z_1, z)`` in the variable ``t``, spectator ``z_1``."""
        p, q = self.scalars.gen("p1"), self.scalars.gen("q1")
        bracket = self.zero()
        for k in range(1, self.order):
            difference = self.power("t", k) - self.power("tilde", k)
            bracket = bracket + difference.scale(p ** (k + 1) - (-1) ** k * q ** (k + 1))
        denominator = (self.t - self.tilde) * self.x_prime
        factor = self.scalars.scalar(self.scale / 4)
        return (bracket * denominator.inverse()).scale(factor)

    def bidifferential(self, point: str, spectator: int) -> LocalSeries:
        """``scale * B(w, z_i)`` for a local point ``w`` and a spectator ``z_i``."""
        p, q = self.scalars.gen(f"p{spectator}"), self.scalars.gen(f"q{spectator}")
        u = "t" if point == LOCAL_POINT else "tilde"
        total = self.zero()
        for k in range(self.order):
            weight = (k + 1) * (p ** (k + 2) + (-1) ** k * q ** (k + 2))
            total = total + self.power(u, k).scale(weight)
        return total.scale(self.scalars.scalar(self.scale / 2))

    def diagonal_bidifferential(self) -> LocalSeries:
        """``scale * B(z, sigma(z))``, with a double pole at ``t = 0``."""
        z, sigma = self.points[LOCAL_POINT], self.points[INVOLUTION_POINT]
        difference = (z - sigma).normalized().inverse()
        total = (z + sigma).normalized().inverse()
        return (difference * difference + total * total).scale(self.scalars.scalar(self.scale / 2))

    def evaluate(self, correlator: Correlator, slots: Sequence[Slot]) -> LocalSeries:
        """A stable correlator with each variable sent to a local point or a spectator."""
        if correlator.numerator is None:
            raise ValueError(f"{correlator!r} has no numerator to evaluate")
        scalars = self.scalars
        width = 1 + len(scalars.names)
        position = {name: 1 + i for i, name in enumerate(scalars.names)}
        spectator_e = [0] * width
        for j, slot in enumerate(slots):
            if isinstance(slot, int):
                spectator_e[position[f"e{slot}"]] += correlator.exponents[j]
        grouped: dict[tuple[int, ...], dict[tuple[int, ...], object]] = {}
        for monom, coeff in correlator.numerator.items():
            local = []
            exponents = list(spectator_e)
            for j, slot in enumerate(slots):
                if isinstance(slot, int):
                    exponents[position[f"z{slot}"]] += monom[j]
                else:
                    local.append(monom[j])
            bucket = grouped.setdefault(tuple(local), {})
            key = tuple(exponents)
            bucket[key] = bucket.get(key, QQ.zero) + coeff
        local_slots = [slot for slot in slots if isinstance(slot, str)]
        total = self.zero()
        for local, monomials in grouped.items():
            series = self.one()
            for slot, m in zip(local_slots, local):
                if m:
                    series = series * self.power(slot, m)
            total = total + series.scale(scalars.ring.from_dict(monomials))
        for j, slot in enumerate(slots):
            if isinstance(slot, str) and correlator.exponents[j]:
                total = total * self.inverse_d(slot) ** correlator.exponents[j]
        return total


def _local_names(n: int) -> list[str]:
    return [f"{prefix}{i}" for prefix in "zepq" for i in range(1, n + 1)]


def _pole_substitution(scalars: ScalarRing, n: int) -> dict[str, PolyElement]:
    """``p_i = 1/(z_i - a)`` and ``q_i = 1/(z_i + a)`` as polynomials over ``D(z_i)``."""
    s = scalars.s
    a = scalars.gen("a")
    values = {}
    for i in range(1, n + 1):
        z, e = scalars.gen(f"z{i}"), scalars.gen(f"e{i}")
        for name, sign in (("p", 1), ("q", -1)):
            total = sum(
                (z ** (2 * s - 1 - k) * (sign * a) ** k for k in range(2 * s)), scalars.zero
            )
            values[f"{name}{i}"] = scalars.reduce(total * e * (-2 * s))
    return values


def _substitute_poles(scalars: ScalarRing, element: PolyElement, n: int) -> PolyElement:
    values = _pole_substitution(scalars, n)
    names = [f"{prefix}{i}" for prefix in "pq" for i in range(1, n + 1)]
    positions = [1 + scalars.names.index(name) for name in names]
    patterns: dict[tuple[int, ...], dict[tuple[int, ...], object]] = {}
    for monom, coeff in element.items():
        pattern = tuple(monom[p] for p in positions)
        rest = list(monom)
        for p in positions:
            rest[p] = 0
        patterns.setdefault(pattern, {})[tuple(rest)] = coeff
    powers: dict[tuple[str, int], PolyElement] = {}

    def power(name: str, k: int) -> PolyElement:
        if k == 0:
            return scalars.one
        if (name, k) not in powers:
            powers[(name, k)] = scalars.reduce(power(name, k - 1) * values[name])
        return powers[(name, k)]

    result = scalars.zero
    for pattern, rest in patterns.items():
        term = scalars.ring.from_dict(rest)
        for name, k in zip(names, pattern):
            if k:
                term = scalars.reduce(term * power(name, k))
        result = result + term
    return scalars.reduce(result)


def recursion_step(
    g: int,
    n: int,
    known: Mapping[CorrelatorKey, Correlator],
    order: int,
    s: int,
    scale: object = 1,
    reduced: bool = False,
) -> Correlator:
    """One step of the recursion: ``omega_{g,n}`` from the correlators of smaller ``2g-2+n``.

    Args:
        g: Genus.
        n: Number of points.
        known: Every stable correlator the bracket needs, keyed by ``(g, n)``.
        order: Local precision at the ramification point.
        s: Half of ``r``.
        scale: Factor in front of the bidifferential.
        reduced: Sum over a half-orbit of ramification points instead of all of them.

    Returns:
        The correlator ``omega_{g,n}``.

    Raises:
        ValueError: If ``(g, n)`` is unstable or a prerequisite is missing.
        TruncationError: If ``order`` is too small for the residue.
    """
    _require_stable(g, n)
    scalars = ScalarRing(s, _local_names(n))
    local = _LocalExpansion(scalars, order, Rational(scale))  # type: ignore[arg-type]

    def lower(key: CorrelatorKey) -> Correlator:
        try:
            return known[key]
        except KeyError as e:
            raise ValueError(f"omega_{key} is needed for omega_({g},{n}): {e}") from e

    def factor(key: CorrelatorKey, point: str, spectators: tuple[int, ...]) -> LocalSeries:
        if key == (0, 2):
            return local.bidifferential(point, spectators[0])
        return local.evaluate(lower(key), [point, *spectators])

    spectators = tuple(range(2, n + 1))
    bracket = local.zero()
    if g >= 1:
        if (g - 1, n + 1) == (0, 2):
            bracket = bracket + local.diagonal_bidifferential()
        else:
            slots = [LOCAL_POINT, INVOLUTION_POINT, *spectators]
            bracket = bracket + local.evaluate(lower((g - 1, n + 1)), slots)
    for g1, left, g2, right in _splits(g, n):
        bracket = bracket + factor((g1, 1 + len(left)), LOCAL_POINT, left) * factor(
            (g2, 1 + len(right)), INVOLUTION_POINT, right
        )
    integrand = local.kernel() * bracket * local.jacobian
    try:
        residue = integrand.residue()
    except TruncationError as e:
        raise TruncationError(f"omega_({g},{n}) at local order {order}: {e}") from e
    residue = _substitute_poles(scalars, residue, n)
    summed = scalars.half_trace(residue) if reduced else scalars.trace(residue)
    terms = {monom[1 : 1 + 2 * n]: coeff for monom, coeff in summed.items()}
    result = Correlator.from_inverse_powers(g, n, s, terms)
    bound = pole_order(g, n)
    if any(e > bound for e in result.exponents):
        raise ArithmeticError(f"omega_({g},{n}) has poles {result.exponents} above {bound}")
    return result


class TopologicalRecursion:
    """Correlators of the spin curve for one ``s``, computed on demand and cached by ``(g, n)``.

    Attributes:
        s (int): Half of ``r``.
        scale (Rational): Factor in front of the bidifferential (``2`` for the reduced curve).
        reduced (bool): Whether residues are summed over a half-orbit of ramification points.
        margin (int): Extra local orders on top of the pole-order bound.
    """

    def __init__(
        self, s: int, scale: object = 1, reduced: bool = False, margin: int | None = None
    ) -> None:
        """Create an engine.

        Raises:
            ValueError: If ``s < 1`` or the margin is negative.
        """
        if s < 1:
            raise ValueError(f"s must be positive, got {s}")
        self.s = s
        self.scale = Rational(scale)  # type: ignore[arg-type]
        self.reduced = reduced
        self.margin = load_settings().truncation_margin if margin is None else margin
        if self.margin < 0:
            raise ValueError(f"Truncation margin must be non-negative, got {self.margin}")
        self._cache: dict[CorrelatorKey, Correlator] = {}

    def correlator(self, g: int, n: int) -> Correlator:
        """``omega_{g,n}``, including the closed ``(0,1)`` and ``(0,2)`` forms."""
        if (g, n) in ((0, 1), (0, 2)):
            return Correlator.unstable(g, n, self.s, self.scale)
        _require_stable(g, n)
        key = (g, n)
        if key not in self._cache:
            known = {k: self.correlator(*k) for k in self._prerequisites(g, n)}
            order = working_order(g, n, self.margin)
            logger.debug(
                f"recursion step ({g},{n}) s={self.s} scale={self.scale} "
                f"reduced={self.reduced} order={order}"
            )
            self._cache[key] = recursion_step(
                g, n, known, order, self.s, self.scale, self.reduced
            )
        return self._cache[key]

    @staticmethod
    def _prerequisites(g: int, n: int) -> set[CorrelatorKey]:
        keys = {(g1, 1 + len(left)) for g1, left, _, _ in _splits(g, n)}
        keys |= {(g2, 1 + len(right)) for _, _, g2, right in _splits(g, n)}
        if g >= 1:
            keys.add((g - 1, n + 1))
        return {k for k in keys if 2 * k[0] - 2 + k[1] > 0}


@lru_cache(maxsize=None)
def _engine(s: int, scale: Rational, reduced: bool, margin: int | None) -> TopologicalRecursion:
    return TopologicalRecursion(s, scale, reduced, margin)


def correlator(
    g: int, n: int, r: int, scale: object = 1, reduced: bool = False, margin: int | None = None
) -> Correlator:
    """``omega_{g,n}`` of the spin curve for ``r = 2s`` (cached per engine)."""
    engine = _engine(_half(r), Rational(scale), reduced, margin)  # type: ignore[arg-type]
    return engine.correlator(g, n)


def reduced_correlator(g: int, n: int, r: int, margin: int | None = None) -> Correlator:
    """``omega-hat_{g,n}``: half-orbit recursion with the doubled bidifferential ``2B``."""
    return correlator(g, n, r, scale=2, reduced=True, margin=margin)


def _derivative(
    terms: Mapping[tuple[int, int], Rational], s: int
) -> dict[tuple[int, int], Rational]:
    """``d/dz`` on ``sum c z^m D(z)^{-k}``, using ``dD^{-1}/dz = (2s)^2 z^{2s-1} D^{-2}``."""
    result: dict[tuple[int, int], Rational] = {}
    for (m, k), c in terms.items():
        if m:
            result[(m - 1, k)] = result.get((m - 1, k), Rational(0)) + m * c
        if k:
            key = (m + 2 * s - 1, k + 1)
            result[key] = result.get(key, Rational(0)) + k * (2 * s) ** 2 * c
    return result


def omega_11_closed(r: int) -> Correlator:
    """``d[(s z/D d/dz + 1) s z^{2s-1}/(12 D)]`` as a correlator, ``D = 1 - 2s z^{2s}``."""
    s = _half(r)
    phi = {(2 * s - 1, 1): Rational(s, 12)}
    psi = {(m + 1, k + 1): s * c for (m, k), c in _derivative(phi, s).items()}
    for key, c in phi.items():
        psi[key] = psi.get(key, Rational(0)) + c
    return Correlator.from_inverse_powers(1, 1, s, _derivative(psi, s))


# Expansion near e^{x_i} = 0


def expand_form(corr: Correlator, degree: int) -> dict[tuple[int, ...], Rational]:
    """Expansion coefficients of a stable correlator near ``X_i = e^{x_i} = 0``.

    The coefficient of ``prod_i mu_i X_i^{mu_i} dx_i`` is returned, that is the coefficient of
    ``prod_i X_i^{mu_i} dx_i`` divided by ``prod mu_i``.

    Every ordered ``mu`` with positive parts and ``|mu| <= degree`` is returned, even parts
    included.

    Raises:
        ValueError: If the correlator is unstable or ``degree < n``.
    """
    if corr.numerator is None:
        raise ValueError(f"{corr!r} is not a stable correlator")
    if degree < corr.n:
        raise ValueError(f"degree {degree} leaves no room for {corr.n} positive parts")
    s = corr.s
    z = inversion_power_series(1, s, degree)
    jacobian = z.derivative().shift(1)
    inverse_d = ((z ** (2 * s)).scale(-2 * s) + 1).inverse()
    z_powers: dict[int, TruncatedSeries] = {}

    def z_power(m: int) -> TruncatedSeries:
        if m not in z_powers:
            z_powers[m] = z**m
        return z_powers[m]

    tables: list[dict[int, list[Rational]]] = []
    for i, e in enumerate(corr.exponents):
        base = (inverse_d**e * jacobian).truncate(degree)
        table = {}
        for m in {monom[i] for monom, _ in corr.terms()}:
            series = (z_power(m) * base).truncate(degree)
            table[m] = [series.coefficient(k) for k in range(degree + 1)]
        tables.append(table)
    terms = list(corr.terms())
    result = {}
    for mu in product(range(1, degree + 1), repeat=corr.n):
        if sum(mu) > degree:
            continue
        value = sum(
            (c * prod(tables[i][m[i]][mu[i]] for i in range(corr.n)) for m, c in terms),
            Rational(0),
        )
        result[mu] = value / prod(mu)
    return result


def expand_hurwitz(corr: Correlator, r: int, degree: int) -> dict[Partition, Rational]:
    """Spin single Hurwitz numbers predicted by a correlator, for odd ``mu``, ``|mu| <= degree``.

    Raises:
        ValueError: If ``r`` does not match the correlator.
    """
    if _half(r) != corr.s:
        raise ValueError(f"Correlator has s = {corr.s}, not r/2 = {r // 2}")
    return {
        Partition(mu): value
        for mu, value in expand_form(corr, degree).items()
        if all(part % 2 for part in mu) and list(mu) == sorted(mu, reverse=True)
    }


def _bivariate_product(
    a: Mapping[tuple[int, int], Rational], b: Mapping[tuple[int, int], Rational], degree: int
) -> dict[tuple[int, int], Rational]:
    result: dict[tuple[int, int], Rational] = {}
    for (i1, j1), x in a.items():
        for (i2, j2), y in b.items():
            if i1 + i2 + j1 + j2 <= degree:
                key = (i1 + i2, j1 + j2)
                result[key] = result.get(key, Rational(0)) + x * y
    return result


def _bivariate_log(
    series: Mapping[tuple[int, int], Rational], degree: int
) -> dict[tuple[int, int], Rational]:
    """``log`` of a bivariate series with constant term one, to total degree ``degree``."""
    u = {k: v for k, v in series.items() if k != (0, 0) and sum(k) <= degree}
    result: dict[tuple[int, int], Rational] = {}
    power = dict(u)
    k = 1
    while power:
        for key, value in power.items():
            result[key] = result.get(key, Rational(0)) + Rational((-1) ** (k + 1), k) * value
        power = {key: v for key, v in _bivariate_product(power, u, degree).items() if v != 0}
        k += 1
    return result


def two_point_expansion(r: int, degree: int) -> dict[tuple[int, int], Rational]:
    """``F_{0,2}`` from ``omega_{0,2}(z_1, z_2) - omega_{0,2}(X_1, X_2)``.

    The difference is ``d_1 d_2`` of
    ``1/2 log[(z_1 - z_2)(X_1 + X_2) / ((X_1 - X_2)(z_1 + z_2))]``; the mixed coefficients with
    ``mu_1 + mu_2 <= degree`` are returned.
    """
    s = _half(r)
    z = inversion_power_series(1, s, degree + 1)
    minus: dict[tuple[int, int], Rational] = {}
    plus: dict[tuple[int, int], Rational] = {}
    for k in range(1, degree + 2):
        c = z.coefficient(k)
        if c == 0:
            continue
        for j in range(k):
            minus[(j, k - 1 - j)] = minus.get((j, k - 1 - j), Rational(0)) + c
            plus[(k - 1 - j, j)] = plus.get((k - 1 - j, j), Rational(0)) + (-1) ** j * c
    log_minus, log_plus = _bivariate_log(minus, degree), _bivariate_log(plus, degree)
    result = {}
    for mu1 in range(1, degree):
        for mu2 in range(1, degree - mu1 + 1):
            key = (mu1, mu2)
            value = (log_minus.get(key, Rational(0)) - log_plus.get(key, Rational(0))) / 2
            result[key] = value
    return result


def check_conjecture(
    g: int, n: int, r: int, degree: int, margin: int | None = None
) -> ConjectureReport:
    """Compare correlator expansions with connected spin single Hurwitz numbers.

    Even parts must expand to zero. ``(0,1)`` compares the genus-zero free energy with the
    connected numbers, ``(0,2)`` the expansion of the two-point form with the closed series.
    """
    report = ConjectureReport(g=g, n=n, r=r, degree=degree)
    if (g, n) == (0, 1):
        series = f01_series(r, degree)
        for mu in range(1, degree + 1):
            report.compared += 1
            value = series.coefficient(mu)
            number = connected(HurwitzQuery.single(0, (mu,), r)).value
            if value != number:
                report.mismatches.append(f"({mu},): {value} != {number}")
    elif (g, n) == (0, 2):
        expected = f02_series(r, degree)
        for mu, value in two_point_expansion(r, degree).items():
            report.compared += 1
            if value != expected.coefficient(mu):
                report.mismatches.append(f"{mu}: {value} != {expected.coefficient(mu)}")
    else:
        expansion = expand_form(correlator(g, n, r, margin=margin), degree)
        numbers: dict[Partition, Rational] = {}
        for mu, value in expansion.items():
            report.compared += 1
            key = Partition(mu)
            if key not in numbers:
                numbers[key] = connected(HurwitzQuery.single(g, key, r)).value
            if value != numbers[key]:
                report.mismatches.append(f"{mu}: {value} != {numbers[key]}")
    if report.mismatches:
        logger.warning(f"({g},{n}) r={r}: {len(report.mismatches)} mismatches")
    logger.info(f"conjecture check ({g},{n}) r={r} degree={degree}: {report.compared} cells")
    return report
