"""Spin Hurwitz numbers from characters of the Sergeev group.

The general formula sums over strict ``lambda`` of size ``d``; with ``(r+1)``-completed cycles
over the branch points it specialises to the single and double numbers

    h_{g;mu}    = 2^{1-g}/(b! prod mu_i) sum_lambda zeta^lambda_mu dim V^lambda
                  / (2^{delta + l(mu) + d} d!) (p_{r+1}(lambda)/(r+1))^b,
    h_{g;mu,nu} = 2^{1-g}/(b! prod mu_i prod nu_j) sum_lambda zeta^lambda_mu zeta^lambda_nu
                  / 2^{delta + l(mu) + l(nu)} (p_{r+1}(lambda)/(r+1))^b.

Connected numbers are read off the formal logarithm of the generating series.
"""

from collections.abc import Iterable, Sequence
from functools import lru_cache
from itertools import combinations, product
from math import comb, factorial, prod

from loguru import logger
from sympy import Expr, Matrix, Poly, Rational, Symbol, expand, symbols
from sympy.polys.monomials import itermonomials
from sympy.polys.orderings import monomial_key

from spin_hurwitz.config import CACHE_SIZE
from spin_hurwitz.models.generating import CONSTANT_KEY, GeneratingKey, GeneratingSeries
from spin_hurwitz.models.hurwitz import HurwitzQuery, HurwitzValue
from spin_hurwitz.models.partition import Partition, PartitionClass, ones
from spin_hurwitz.models.reports import (
    ChamberFit,
    FitReport,
    PiecewisePolynomialityReport,
    QuasiPolynomialityReport,
)
from spin_hurwitz.services.partitions import (
    aut_order,
    enumerate_partitions,
    parity_delta,
    power_sum_eval,
    spin_decomposition,
    sub_multisets,
)
from spin_hurwitz.services.qschur import (
    central_character,
    character,
    dim_v_closed,
    half_substitution,
    schur_q,
)


def _require_odd(profile: Partition, d: int) -> None:
    if not profile.is_odd:
        raise ValueError(f"Profiles must be odd partitions, got {profile!r}")
    if profile.size != d:
        raise ValueError(f"Profile {profile!r} has size {profile.size}, expected {d}")


def gunningham_general(
    chi: int, parity: int, profiles: Sequence[Iterable[int]], d: int
) -> Rational:
    """Signed count of degree-``d`` spin covers of a base of Euler characteristic ``chi``.

    ``2^{(sum_j (l(mu^j) - d) - d chi)/2} sum_lambda (-1)^{p l(lambda)}
    (dim V^lambda / (2^{delta/2} d!))^chi prod_j f^lambda_{mu^j}``.

    Args:
        chi: Euler characteristic of the base.
        parity: Parity ``p`` of the theta characteristic on the base.
        profiles: Odd partitions of ``d``, one per branch point.
        d: Degree.

    Returns:
        The exact value.

    Raises:
        ValueError: If a profile is not an odd partition of ``d`` or the parity is not 0 or 1.
        ArithmeticError: If the power of two is not integral for some ``lambda``.
    """
    if parity not in (0, 1):
        raise ValueError(f"parity must be 0 or 1, got {parity}")
    parts = [Partition(p) for p in profiles]
    for profile in parts:
        _require_odd(profile, d)
    base_exponent = sum(p.length - d for p in parts) - d * chi
    total = Rational(0)
    for lam in enumerate_partitions(d, PartitionClass.STRICT):
        numerator = base_exponent - parity_delta(lam) * chi
        if numerator % 2:
            raise ArithmeticError(
                f"Non-integral power of two 2^({numerator}/2) for lambda = {lam!r}"
            )
        term = Rational(dim_v_closed(lam), factorial(d)) ** chi * Rational(2) ** (numerator // 2)
        term *= prod((central_character(lam, p) for p in parts), start=Rational(1))
        total += -term if parity and lam.length % 2 else term
    return total


def _completed_cycle(lam: Partition, r: int, b: int) -> Rational:
    return Rational(power_sum_eval(lam, r + 1), r + 1) ** b


def spin_single_disconnected(g: int, mu: Iterable[int], r: int) -> HurwitzValue:
    """Disconnected single number ``h_{g;mu}`` by the character formula.

    Returns:
        The value, or a structural zero for even parts or non-integral ``b``.
    """
    query = HurwitzQuery.single(g=g, mu=mu, r=r, connected=False)
    reason = query.structural_zero_reason()
    if reason is not None:
        return HurwitzValue.structural_zero(reason)
    b = query.branch_points()
    mu, d = query.mu, query.degree
    total = Rational(0)
    for lam in enumerate_partitions(d, PartitionClass.STRICT):
        weight = Rational(
            character(lam, mu) * dim_v_closed(lam),
            2 ** (parity_delta(lam) + mu.length + d) * factorial(d),
        )
        total += weight * _completed_cycle(lam, r, b)
    value = Rational(2) ** (1 - g) / (factorial(b) * prod(mu)) * total
    logger.debug(f"characters {query.label()}: {value}")
    return HurwitzValue.computed(value)


def spin_double_disconnected(
    g: int, mu: Iterable[int], nu: Iterable[int], r: int
) -> HurwitzValue:
    """Disconnected double number ``h_{g;mu,nu}`` by the character formula.

    Raises:
        ValueError: If ``|mu| != |nu|``.
    """
    query = HurwitzQuery.double(g=g, mu=mu, nu=nu, r=r, connected=False)
    reason = query.structural_zero_reason()
    if reason is not None:
        return HurwitzValue.structural_zero(reason)
    assert query.nu is not None
    b = query.branch_points()
    mu, nu = query.mu, query.nu
    total = Rational(0)
    for lam in enumerate_partitions(query.degree, PartitionClass.STRICT):
        weight = Rational(
            character(lam, mu) * character(lam, nu),
            2 ** (parity_delta(lam) + mu.length + nu.length),
        )
        total += weight * _completed_cycle(lam, r, b)
    value = Rational(2) ** (1 - g) / (factorial(b) * prod(mu) * prod(nu)) * total
    return HurwitzValue.computed(value)


def tau_coefficient(b: int, mu: Iterable[int], nu: Iterable[int], r: int) -> Rational:
    """Coefficient of ``t^b p_mu q_nu`` in the spin tau function.

    ``sum_lambda 2^{-l(lambda)} exp(t p_{r+1}(lambda)/(r+1)) Q_lambda(p/2) Q_lambda(q/2)``;
    it equals ``2^{g-1} h_{g;mu,nu} / (|Aut mu| |Aut nu|)``.
    """
    return _tau_coefficient(b, Partition(mu), Partition(nu), r)


@lru_cache(maxsize=CACHE_SIZE)
def _tau_coefficient(b: int, mu: Partition, nu: Partition, r: int) -> Rational:
    if mu.size != nu.size:
        return Rational(0)
    total = Rational(0)
    for lam in enumerate_partitions(mu.size, PartitionClass.STRICT):
        left = half_substitution(schur_q(lam, within=mu)).coefficient(mu)
        if left == 0:
            continue
        right = half_substitution(schur_q(lam, within=nu)).coefficient(nu)
        total += Rational(1, 2**lam.length) * left * right * _completed_cycle(lam, r, b)
    return total / factorial(b)


def riemann_hurwitz_b(g: int, mu: Iterable[int], nu: Iterable[int] | None, r: int) -> int | str:
    """Number of completed cycles, or the reason no cover exists."""
    query = HurwitzQuery.model_validate({"g": g, "r": r, "mu": mu, "nu": nu})
    reason = query.structural_zero_reason()
    return reason if reason is not None else query.branch_points()


def disconnected(query: HurwitzQuery) -> HurwitzValue:
    """Disconnected number for a single or double query."""
    if query.nu is None:
        return spin_single_disconnected(query.g, query.mu, query.r)
    return spin_double_disconnected(query.g, query.mu, query.nu, query.r)


def _target(query: HurwitzQuery) -> GeneratingKey:
    nu = query.nu if query.nu is not None else ones(query.degree)
    return (query.branch_points(), query.mu, nu)


def generating_series(query: HurwitzQuery, degree: int | None = None) -> GeneratingSeries:
    """Truncated generating series holding every monomial that divides the query's monomial.

    Raises:
        ValueError: If ``degree`` is below ``|mu|``.
    """
    degree = query.degree if degree is None else degree
    if degree < query.degree:
        raise ValueError(f"Truncation degree {degree} is below |mu| = {query.degree}")
    b, mu, nu = _target(query)
    terms: dict[GeneratingKey, Rational] = {CONSTANT_KEY: Rational(1)}
    nu_subs = [n for n in sub_multisets(nu) if n]
    for mu_sub in sub_multisets(mu):
        if not mu_sub:
            continue
        for nu_sub in nu_subs:
            if nu_sub.size != mu_sub.size:
                continue
            for b_sub in range(b + 1):
                terms[(b_sub, mu_sub, nu_sub)] = tau_coefficient(b_sub, mu_sub, nu_sub, query.r)
    return GeneratingSeries(degree, terms)


def connected(query: HurwitzQuery, degree: int | None = None) -> HurwitzValue:
    """Connected number by the formal logarithm of the generating series.

    Single queries use the profile ``(1^d)`` over infinity and divide by ``d!``.

    Args:
        query: The number to compute.
        degree: Truncation degree of the generating series, at least ``|mu|``.

    Returns:
        The value, or a structural zero.

    Raises:
        ValueError: If ``degree`` is below ``|mu|``.
    """
    reason = query.structural_zero_reason()
    if reason is not None:
        if degree is not None and degree < query.degree:
            raise ValueError(f"Truncation degree {degree} is below |mu| = {query.degree}")
        return HurwitzValue.structural_zero(reason)
    target = _target(query)
    series = generating_series(query, degree)
    weight = aut_order(query.mu) * Rational(2) ** (1 - query.g)
    if query.nu is not None:
        weight *= aut_order(query.nu)
    value = weight * series.log_coefficient(target)
    logger.debug(f"connected {query.label()} from {series!r}: {value}")
    return HurwitzValue.computed(value)


# Polynomiality checks


FittedPolynomial = tuple[FitReport, Expr | None]


def _fit(
    variables: Sequence[Symbol],
    degree: int,
    fit_points: Sequence[tuple[int, ...]],
    fit_values: Sequence[Rational],
    heldout_points: Sequence[tuple[int, ...]],
    heldout_values: Sequence[Rational],
) -> FittedPolynomial:
    gens = list(variables)
    monomials = sorted(itermonomials(gens, degree), key=monomial_key("grlex", gens))
    report = FitReport(
        degree_bound=degree,
        fitted_points=[list(p) for p in fit_points],
        heldout_points=[list(p) for p in heldout_points],
    )
    if len(fit_points) < len(monomials):
        report.failures.append(f"{len(fit_points)} points for {len(monomials)} monomials")
        return report, None
    rows = [[m.subs(dict(zip(gens, p, strict=True))) for m in monomials] for p in fit_points]
    try:
        solution, free = Matrix(rows).gauss_jordan_solve(Matrix(list(fit_values)))
    except ValueError:
        report.failures.append("no polynomial of this degree fits the samples")
        return report, None
    if free.shape[0]:
        report.failures.append("samples do not determine the fit")
        return report, None
    polynomial = expand(sum(c * m for c, m in zip(solution, monomials, strict=True)))
    for point, expected in zip(heldout_points, heldout_values, strict=True):
        got = polynomial.subs(dict(zip(gens, point, strict=True)))
        if got != expected:
            report.failures.append(f"{list(point)}: fit {got} != {expected}")
    report.polynomial = str(polynomial)
    report.passed = not report.failures
    return report, polynomial


def _stripped_single(g: int, mu: Sequence[int], r: int) -> Rational:
    value = connected(HurwitzQuery.single(g=g, mu=mu, r=r)).value
    for part in mu:
        k = spin_decomposition(part, r)[0]
        value = value * factorial(k) / Rational(part) ** k
    return value


def _lattice(dimension: int) -> Iterable[tuple[int, ...]]:
    level = 0
    while True:
        for point in product(range(level + 1), repeat=dimension):
            if sum(point) == level:
                yield point
        level += 1


def quasi_polynomiality_check(
    g: int,
    n: int,
    r: int,
    residues: Sequence[int],
    sample_size: int | None = None,
    holdout: int = 3,
) -> QuasiPolynomialityReport:
    """Fit connected single numbers with fixed residues by a polynomial of degree ``3g-3+n``.

    The prefactor ``prod mu_i^{[mu_i]}/[mu_i]!`` is stripped first; points are taken on the
    lattice ``mu_i = r(k_i + 1) - 2<mu_i> - 1`` by increasing ``sum k_i``.

    Args:
        g: Genus.
        n: Number of parts.
        r: Even positive parameter.
        residues: ``<mu_i>`` for each part, in ``0..r/2-1``.
        sample_size: Number of fitting points; defaults to the number of monomials.
        holdout: Number of further points checked against the fit.

    Returns:
        The report with the fitted polynomial in ``mu1..mun``.

    Raises:
        ValueError: If ``2g - 2 + n <= 0``, the residues are inconsistent with an integral ``b``,
            or ``sample_size`` is smaller than the number of monomials.
    """
    if 2 * g - 2 + n <= 0:
        raise ValueError(f"Unstable (g, n) = ({g}, {n})")
    if len(residues) != n or any(not 0 <= a < r // 2 for a in residues):
        raise ValueError(f"Need {n} residues in 0..{r // 2 - 1}, got {list(residues)}")
    if (2 * g - 2 + n - sum(2 * a + 1 for a in residues)) % r:
        raise ValueError(f"Residues {list(residues)} never give an integral b for g={g}, r={r}")
    degree = 3 * g - 3 + n
    needed = comb(degree + n, n)
    sample_size = needed if sample_size is None else sample_size
    if sample_size < needed:
        raise ValueError(f"{sample_size} sample points cannot fix {needed} coefficients")
    variables = symbols(f"mu1:{n + 1}")
    points: list[tuple[int, ...]] = []
    for k in _lattice(n):
        points.append(tuple(r * (k_i + 1) - 2 * a - 1 for k_i, a in zip(k, residues, strict=True)))
        if len(points) == sample_size + holdout:
            break
    values = [_stripped_single(g, p, r) for p in points]
    fit, _ = _fit(
        variables,
        degree,
        points[:sample_size],
        values[:sample_size],
        points[sample_size:],
        values[sample_size:],
    )
    logger.info(f"quasi-polynomiality g={g} n={n} r={r}: {'pass' if fit.passed else 'fail'}")
    return QuasiPolynomialityReport(g=g, n=n, r=r, residues=list(residues), fit=fit)


Wall = tuple[tuple[int, ...], tuple[int, ...]]


def _walls(m: int, n: int) -> list[Wall]:
    seen: set[Wall] = set()
    walls = []
    for left_size in range(1, m + 1):
        for left in combinations(range(m), left_size):
            for right_size in range(1, n + 1):
                for right in combinations(range(n), right_size):
                    if left_size == m and right_size == n:
                        continue
                    complement = (
                        tuple(i for i in range(m) if i not in left),
                        tuple(j for j in range(n) if j not in right),
                    )
                    if (left, right) in seen or complement in seen:
                        continue
                    seen.add((left, right))
                    walls.append((left, right))
    return walls


def _signs(mu: Sequence[int], nu: Sequence[int], walls: Sequence[Wall]) -> tuple[int, ...] | None:
    signs = []
    for left, right in walls:
        difference = sum(mu[i] for i in left) - sum(nu[j] for j in right)
        if difference == 0:
            return None
        signs.append(1 if difference > 0 else -1)
    return tuple(signs)


def piecewise_polynomiality_check(
    g: int, m: int, n: int, r: int, max_level: int | None = None, holdout: int = 2
) -> PiecewisePolynomialityReport:
    """Fit connected double numbers chamber by chamber.

    Points are odd ``mu_1..mu_m, nu_1..nu_{n-1}`` with ``nu_n = |mu| - sum nu_j``; the
    polynomial in these free variables must have total degree at most ``D = 2g - 1 + b`` with
    only homogeneous degrees ``D - 2k``.

    Args:
        g: Genus.
        m: Length of ``mu``.
        n: Length of ``nu``.
        r: Even positive parameter.
        max_level: Largest ``sum k`` of sampled free parts ``2k + 1``; defaults to ``D + 3``.
        holdout: Points per chamber kept out of the fit.

    Returns:
        The chamber report.

    Raises:
        ValueError: For ``(g, m + n) = (0, 2)`` or a non-integral ``b``.
    """
    if (g, m + n) == (0, 2):
        raise ValueError("(g, m + n) = (0, 2) is unstable")
    if (2 * g - 2 + m + n) % r:
        raise ValueError(f"b = {2 * g - 2 + m + n}/{r} is not an integer")
    b = (2 * g - 2 + m + n) // r
    degree = 2 * g - 1 + b
    free = m + n - 1
    variables = symbols(f"x1:{free + 1}")
    per_chamber = 2 * comb(degree + free, free) + holdout
    max_level = degree + 3 if max_level is None else max_level
    walls = _walls(m, n)
    samples: dict[tuple[int, ...], list[tuple[tuple[int, ...], Rational]]] = {}
    for k in _lattice(free):
        if sum(k) > max_level:
            break
        parts = tuple(2 * k_i + 1 for k_i in k)
        mu, nu_head = parts[:m], parts[m:]
        last = sum(mu) - sum(nu_head)
        if last < 1:
            continue
        signs = _signs(mu, nu_head + (last,), walls)
        if signs is None or len(samples.get(signs, [])) >= per_chamber:
            continue
        value = connected(HurwitzQuery.double(g=g, mu=mu, nu=nu_head + (last,), r=r)).value
        samples.setdefault(signs, []).append((parts, value))
    chambers: list[ChamberFit] = []
    expressions: dict[tuple[int, ...], Expr] = {}
    for signs, data in sorted(samples.items()):
        cut = max(len(data) - holdout, 0)
        fit, expression = _fit(
            variables,
            degree,
            [p for p, _ in data[:cut]],
            [v for _, v in data[:cut]],
            [p for p, _ in data[cut:]],
            [v for _, v in data[cut:]],
        )
        parity_ok = True
        if expression is not None:
            expressions[signs] = expression
            degrees = {sum(e) for e in Poly(expression, *variables).monoms()}
            parity_ok = all(d <= degree and (degree - d) % 2 == 0 for d in degrees)
        chambers.append(ChamberFit(signs=list(signs), fit=fit, parity_ok=parity_ok))
    for chamber in chambers:
        expression = expressions.get(tuple(chamber.signs))
        if expression is None or not chamber.fit.passed:
            continue
        neighbours = [
            s for s in samples if sum(a != c for a, c in zip(s, chamber.signs, strict=True)) == 1
        ]
        if neighbours:
            chamber.breaks_across_wall = any(
                expression.subs(dict(zip(variables, p, strict=True))) != v
                for s in neighbours
                for p, v in samples[s]
            )
    logger.info(f"piecewise polynomiality g={g} (m,n)=({m},{n}): {len(chambers)} chamber(s)")
    return PiecewisePolynomialityReport(
        g=g,
        m=m,
        n=n,
        r=r,
        degree_bound=degree,
        walls=[f"mu{[i + 1 for i in left]} = nu{[j + 1 for j in right]}" for left, right in walls],
        chambers=chambers,
    )
