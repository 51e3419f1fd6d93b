"""Closed formulas and generating series for one-part and genus-zero spin Hurwitz numbers.

Conventions for the elementary series::

    varsigma(z) = 2 sinh(z/2)        S(z) = varsigma(z)/z
    qoppa(z)    = cosh(z/2)/2        K(z) = qoppa(z)/z

All coefficients are exact rationals.
"""

from collections.abc import Sequence
from functools import lru_cache
from math import comb, factorial, prod
from typing import TypeVar

from loguru import logger
from sympy import Rational, bernoulli

from spin_hurwitz.models.hurwitz import HurwitzQuery, HurwitzValue
from spin_hurwitz.models.partition import Partition
from spin_hurwitz.models.series import SparseSeries, TruncatedSeries
from spin_hurwitz.services.partitions import enumerate_partitions

T = TypeVar("T", TruncatedSeries, Rational)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind ``S(n, k)``.

    Raises:
        ValueError: If an argument is negative.
    """
    if n < 0 or k < 0:
        raise ValueError(f"S(n, k) needs n, k >= 0, got ({n}, {k})")
    if n == k:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


# Elementary series


def varsigma_series(order: int) -> TruncatedSeries:
    """``2 sinh(z/2)`` up to ``z^order``."""
    return TruncatedSeries.from_function(
        lambda p: Rational(1, 2 ** (p - 1) * factorial(p)) if p % 2 else 0, order
    )


def calligraphic_s_series(order: int, scale: object = 1) -> TruncatedSeries:
    """``S(c z) = sinh(c z/2)/(c z/2)`` up to ``z^order``."""
    c = Rational(scale)
    return TruncatedSeries.from_function(
        lambda p: 0 if p % 2 else c**p / (2**p * factorial(p + 1)), order
    )


def qoppa_series(order: int) -> TruncatedSeries:
    """``cosh(z/2)/2`` up to ``z^order``."""
    return TruncatedSeries.from_function(
        lambda p: 0 if p % 2 else Rational(1, 2 ** (p + 1) * factorial(p)), order
    )


def calligraphic_k_series(order: int) -> TruncatedSeries:
    """``cosh(z/2)/(2z)`` up to ``z^order``, stored with valuation ``-1``."""
    return qoppa_series(order + 1).shift(-1)


def coth_half_series(order: int) -> TruncatedSeries:
    """``coth(z/2) = 2 sum_n B_{2n} z^{2n-1}/(2n)!`` up to ``z^order``, valuation ``-1``."""
    coefficients = [
        0 if (k - 1) % 2 else 2 * bernoulli(k + 1) / factorial(k + 1) for k in range(-1, order + 1)
    ]
    return TruncatedSeries(coefficients, valuation=-1)


# Finite differences


def forward_difference(values: Sequence[T], nu: int) -> T:
    """``(Delta^nu f)(x_0)`` from the samples ``f(x_0), f(x_0 + 1), ...``.

    Works for rationals and for truncated series alike.

    Raises:
        ValueError: If fewer than ``nu + 1`` samples are given.
    """
    if len(values) < nu + 1:
        raise ValueError(f"Delta^{nu} needs {nu + 1} samples, got {len(values)}")
    total = values[0] * 0
    for j in range(nu + 1):
        sign = -1 if (nu - j) % 2 else 1
        total = total + values[j] * (sign * comb(nu, j))
    return total


def delta_power_lemma(n: int, nu: int) -> bool:
    """Check ``Delta^nu l^n |_{l=1} = nu! S(n+1, nu+1)`` by explicit differencing."""
    values = [Rational(l**n) for l in range(1, nu + 2)]
    return bool(forward_difference(values, nu) == factorial(nu) * stirling2(n + 1, nu + 1))


# One-part single numbers


def _single_query(g: int, mu: int, r: int) -> tuple[HurwitzQuery, str | None]:
    query = HurwitzQuery.single(g=g, mu=(mu,), r=r, connected=False)
    return query, query.structural_zero_reason()


def one_part_single_fd(g: int, mu: int, r: int) -> HurwitzValue:
    """One-part single number by the iterated forward difference.

    With ``f(l) = exp(u^r (l^{r+1} - (l - mu)^{r+1})/(r+1))``,

        h = [u^{2g-1+mu}] (-Delta)^{mu-1} f(1) / (2^g mu^2 (mu-1)!).

    The ``u``-series is kept in the variable ``v = u^r``, so the extraction is at ``v^b``.

    Args:
        g: Genus.
        mu: Odd positive degree.
        r: Even positive parameter.

    Returns:
        The value, or a structural zero.
    """
    query, reason = _single_query(g, mu, r)
    if reason is not None:
        return HurwitzValue.structural_zero(reason)
    b = query.branch_points()
    samples = [
        TruncatedSeries.exponential(
            Rational(l ** (r + 1) - (l - mu) ** (r + 1), r + 1), b, variable="v"
        )
        for l in range(1, mu + 1)
    ]
    difference = forward_difference(samples, mu - 1)
    if (mu - 1) % 2:
        difference = -difference
    value = difference.coefficient(b) / (2**g * mu**2 * factorial(mu - 1))
    logger.debug(f"fd route {query.label()} b={b}: {value}")
    return HurwitzValue.computed(value)


def stirling_coefficient(a: int, b: int, mu: int, s: int) -> Rational:
    """Coefficient ``C_a`` of the Stirling-number formula.

    ``C_a = (-1)^a mu^{a+b} sum_{lambda |- a, l(lambda) <= b} b!/((b - l)! prod m_i!)
    prod_i binom(2s+1, lambda_i + 1)/(2s+1)``; ``C_0 = mu^b``.
    """
    total = Rational(0)
    for lam in enumerate_partitions(a):
        if lam.length > b:
            continue
        arrangements = Rational(
            factorial(b),
            factorial(b - lam.length) * prod(factorial(m) for m in lam.multiplicities.values()),
        )
        total += arrangements * prod(
            (Rational(comb(2 * s + 1, part + 1), 2 * s + 1) for part in lam), start=Rational(1)
        )
    sign = -1 if a % 2 else 1
    return sign * Rational(mu) ** (a + b) * total


def one_part_single_stirling(g: int, mu: int, r: int) -> HurwitzValue:
    """One-part single number through Stirling numbers of the second kind.

        h = sum_{a=0}^{2g} C_a S(mu + 2g - a, mu) / (2^g mu^2 b!)

    Returns:
        The value, or a structural zero.
    """
    query, reason = _single_query(g, mu, r)
    if reason is not None:
        return HurwitzValue.structural_zero(reason)
    b = query.branch_points()
    s = r // 2
    total = sum(
        (stirling_coefficient(a, b, mu, s) * stirling2(mu + 2 * g - a, mu))
        for a in range(2 * g + 1)
    )
    return HurwitzValue.computed(Rational(total) / (2**g * mu**2 * factorial(b)))


def one_part_single_genus_one(mu: int, r: int) -> HurwitzValue:
    """Genus-one one-part number ``(s^2/12) mu^{b-1}/(b-1)! (mu + 1/s)``."""
    query, reason = _single_query(1, mu, r)
    if reason is not None:
        return HurwitzValue.structural_zero(reason)
    b = query.branch_points()
    s = Rational(r, 2)
    value = s**2 / 12 * Rational(mu) ** (b - 1) / factorial(b - 1) * (mu + 1 / s)
    return HurwitzValue.computed(value)


def one_part_double_b1(g: int, mu: int, r: int) -> HurwitzValue:
    """One-part single number when exactly one completed cycle is present.

        h = r! / (2^{g-1} mu!) [z^{2g}] qoppa(z) S(mu z) S(z)^{mu-1}

    Raises:
        ValueError: If ``b != 1`` for these arguments.
    """
    query, reason = _single_query(g, mu, r)
    if reason is not None:
        return HurwitzValue.structural_zero(reason)
    if query.branch_points() != 1:
        raise ValueError(f"Needs b = 1, got b = {query.branch_points()} for {query.label()}")
    order = 2 * g
    series = (
        qoppa_series(order)
        * calligraphic_s_series(order, scale=mu)
        * calligraphic_s_series(order) ** (mu - 1)
    )
    value = Rational(factorial(r), factorial(mu)) * series.coefficient(order)
    return HurwitzValue.computed(value / Rational(2) ** (g - 1))


# One-part double numbers


def _one_part_kernel(mu: Partition, order: int) -> TruncatedSeries:
    """``u^{n-1} qoppa(u) prod_i S(mu_i u) / S(u)`` up to ``u^order``."""
    series = qoppa_series(order) / calligraphic_s_series(order)
    for part in mu:
        series = series * calligraphic_s_series(order, scale=part)
    return series.shift(mu.length - 1).truncate(order)


def one_part_double(g: int, d: int, mu: Partition, r: int) -> HurwitzValue:
    """Double number ``h_{g;(d),mu}`` with total ramification over one point.

    The extraction ``[z_1^r ... z_b^r]`` of ``prod_p S(z_p d)`` times the sum over sign
    vectors ``k`` of ``F(sum_p k_p z_p)`` keeps only the even exponents of each ``z_p``,
    each surviving monomial being counted ``2^b`` times. With
    ``F(u) = u^{n-1} qoppa(u) prod S(mu_i u)/S(u) = sum_j f_j u^j`` this gives

        h = (r!)^b/b! d^{b-1} 2^{1-g} sum_j f_j j! [x^j] P(x)^b,
        P(x) = sum_{c even, c <= r} [z^{r-c}]S(d z) x^c/c!.

    Args:
        g: Genus.
        d: Degree, the size of ``mu``.
        mu: Odd partition of ``d``.
        r: Even positive parameter.

    Returns:
        The value, or a structural zero.

    Raises:
        ValueError: If ``|mu| != d``.
    """
    query = HurwitzQuery.double(g=g, mu=mu, nu=(d,), r=r, connected=False)
    reason = query.structural_zero_reason()
    if reason is not None:
        return HurwitzValue.structural_zero(reason)
    b = query.branch_points()
    order = r * b
    kernel = _one_part_kernel(query.mu, order)
    s_d = calligraphic_s_series(r, scale=d)
    inner = TruncatedSeries(
        [s_d.coefficient(r - c) / factorial(c) if c % 2 == 0 else 0 for c in range(r + 1)],
        variable="x",
    ).pad(order)
    power = inner**b
    total = sum(
        (kernel.coefficient(j) * factorial(j) * power.coefficient(j) for j in range(order + 1)),
        Rational(0),
    )
    prefactor = Rational(factorial(r)) ** b / factorial(b) * Rational(d) ** (b - 1)
    value = prefactor * Rational(2) ** (1 - g)
    logger.debug(f"one-part double {query.label()} b={b}")
    return HurwitzValue.computed(value * total)


# Lambert W and genus-zero free energies


def _lambert_term(alpha: Rational, m: int) -> Rational:
    if m == 0:
        return Rational(1)
    return alpha * (m + alpha) ** (m - 1) / factorial(m)


def lambert_power_series(alpha: object, order: int) -> TruncatedSeries:
    """``(W(-t)/(-t))^alpha = sum_m alpha (m + alpha)^{m-1} t^m/m!`` up to ``t^order``."""
    a = Rational(alpha)
    return TruncatedSeries.from_function(lambda m: _lambert_term(a, m), order, variable="t")


def lambert_w_series(order: int) -> TruncatedSeries:
    """Principal branch ``W(t) = sum_{m>=1} (-m)^{m-1} t^m/m!`` up to ``t^order``."""
    return TruncatedSeries.from_function(
        lambda m: 0 if m == 0 else Rational((-m) ** (m - 1), factorial(m)), order, variable="t"
    )


def inversion_power_series(a: int, s: int, order: int) -> TruncatedSeries:
    """``z^a`` as a series in ``X`` on the curve ``X = z exp(-z^{2s})``, up to ``X^order``.

    ``[X^{a + 2sm}] z^a = alpha (m + alpha)^{m-1} (2s)^m / m!`` with ``alpha = a/(2s)``.
    """
    alpha = Rational(a, 2 * s)
    coefficients = [Rational(0)] * (order + 1)
    m = 0
    while a + 2 * s * m <= order:
        coefficients[a + 2 * s * m] = _lambert_term(alpha, m) * (2 * s) ** m
        m += 1
    return TruncatedSeries(coefficients, variable="X")


def f01_series(r: int, order: int) -> TruncatedSeries:
    """Genus-zero one-point free energy ``sum_b (rb+1)^{b-2}/b! X^{rb+1}`` up to ``X^order``."""
    coefficients = [Rational(0)] * (order + 1)
    b = 0
    while r * b + 1 <= order:
        coefficients[r * b + 1] = Rational(r * b + 1) ** (b - 2) / factorial(b)
        b += 1
    return TruncatedSeries(coefficients, variable="X")


def f02_series(r: int, order: int) -> SparseSeries:
    """Genus-zero two-point free energy in ``X_1 = e^{x_1}``, ``X_2 = e^{x_2}``.

    Odd ``mu_1, mu_2`` with ``r | mu_1 + mu_2`` carry
    ``r/(mu_1 + mu_2) prod_i mu_i^{c_i}/c_i!`` with ``c_i = floor(mu_i/r)``; all other
    coefficients vanish.
    """
    terms: dict[tuple[int, int], Rational] = {}
    for mu1 in range(1, order + 1, 2):
        for mu2 in range(1, order + 1 - mu1, 2):
            if (mu1 + mu2) % r:
                continue
            c1, c2 = mu1 // r, mu2 // r
            terms[(mu1, mu2)] = (
                Rational(r, mu1 + mu2)
                * Rational(mu1**c1, factorial(c1))
                * Rational(mu2**c2, factorial(c2))
            )
    return SparseSeries(("X1", "X2"), order, terms)
