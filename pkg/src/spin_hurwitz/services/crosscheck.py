"""Property suites run by ``spin-hurwitz crosscheck``.

Every suite records one case per checked identity; exceptions are logged and turn the case into
a failure, scope errors skip it.
"""

from collections.abc import Callable, Iterator
from itertools import combinations_with_replacement

from loguru import logger
from pydantic import BaseModel, Field
from sympy import Rational

from spin_hurwitz.models.hurwitz import HurwitzQuery, ScopeError
from spin_hurwitz.models.partition import Partition, PartitionClass
from spin_hurwitz.models.reports import CrosscheckReport, SuiteResult
from spin_hurwitz.services.closed_forms import (
    f02_series,
    one_part_single_fd,
    one_part_single_genus_one,
    one_part_single_stirling,
)
from spin_hurwitz.services.cohft_elsv import (
    bernoulli_sum_check,
    double_hodge_integral,
    omega_class_11,
    omega_integral,
    spin_elsv,
)
from spin_hurwitz.services.fock import (
    commutator_check,
    cutjoin_eigenvalue_check,
    heisenberg_check,
    parity_check,
    vev_spin_single,
)
from spin_hurwitz.services.hurwitz_numbers import (
    connected,
    piecewise_polynomiality_check,
    quasi_polynomiality_check,
)
from spin_hurwitz.services.partitions import (
    enumerate_partitions,
    parity_delta,
    partition_count,
    z_factor,
)
from spin_hurwitz.services.qschur import character_table
from spin_hurwitz.services.tr_engine import check_conjecture, correlator, reduced_correlator


class GridSpec(BaseModel):
    """Sizes of the cross-check sweeps.

    Attributes:
        name (str): Grid identifier.
        euler_degree (int): Largest ``d`` for the odd/strict count.
        orthogonality_degree (int): Largest ``d`` for character orthogonality.
        operator_modes (int): Largest ``|m|`` for the operator identities.
        z_order (int): Order in the formal variables for the operator identities.
        state_bound (int): Largest energy of the basis states acted on.
        route_ratios (list[int]): Values of ``r`` for the one-part route comparison.
        route_max_part (int): Largest ``mu`` for the one-part route comparison.
        route_max_genus (int): Largest genus for the one-part route comparison.
        f02_max_part (int): Largest ``mu_i`` in the genus-zero two-point identity.
        tr_cases (list[tuple[int, int, int, int]]): ``(g, n, r, degree)`` conjecture checks.
        reduced_cases (list[tuple[int, int]]): ``(g, n)`` for the reduced-curve law at ``r = 2``.
        elsv_cases (list[tuple[int, int, int]]): ``(g, r, max_size)``; every odd ``mu`` with at
            most two parts and ``|mu| <= max_size``.
        polynomiality (bool): Whether the polynomiality checks run.
    """

    name: str
    euler_degree: int = Field(default=30)
    orthogonality_degree: int = Field(default=10)
    operator_modes: int = Field(default=2)
    z_order: int = Field(default=4)
    state_bound: int = Field(default=6)
    route_ratios: list[int] = Field(default_factory=lambda: [2, 4, 6])
    route_max_part: int = Field(default=19)
    route_max_genus: int = Field(default=2)
    f02_max_part: int = Field(default=9)
    tr_cases: list[tuple[int, int, int, int]] = Field(default_factory=list)
    reduced_cases: list[tuple[int, int]] = Field(default_factory=list)
    elsv_cases: list[tuple[int, int, int]] = Field(default_factory=list)
    polynomiality: bool = Field(default=True)


GRIDS: dict[str, GridSpec] = {
    "quick": GridSpec(
        name="quick",
        euler_degree=20,
        orthogonality_degree=6,
        operator_modes=1,
        z_order=2,
        state_bound=3,
        route_ratios=[2, 4],
        route_max_part=9,
        route_max_genus=1,
        f02_max_part=5,
        tr_cases=[(1, 1, 2, 5), (0, 3, 2, 5), (0, 2, 2, 6), (0, 1, 2, 9)],
        reduced_cases=[(0, 3), (1, 1)],
        elsv_cases=[(1, 2, 5), (0, 2, 5), (1, 4, 7)],
        polynomiality=False,
    ),
    "full": GridSpec(
        name="full",
        tr_cases=[
            (0, 1, 2, 15),
            (0, 1, 4, 17),
            (1, 1, 2, 9),
            (2, 1, 2, 9),
            (0, 2, 2, 10),
            (1, 2, 2, 10),
            (0, 3, 2, 15),
            (1, 1, 4, 19),
        ],
        reduced_cases=[(0, 3), (1, 1), (1, 2), (2, 1)],
        elsv_cases=[(g, r, 9) for g in range(3) for r in (2, 4)],
    ),
}


def _run(suite: SuiteResult, case: str, check: Callable[[], bool]) -> None:
    try:
        ok = check()
    except ScopeError as e:
        logger.debug(f"{suite.name} {case}: skipped, {e}")
        return
    except (ValueError, ArithmeticError) as e:
        logger.opt(exception=True).warning(f"{suite.name} {case} raised {e}")
        ok = False
    suite.check(ok, case)


def _characters(g: int, mu: Partition, r: int) -> Rational:
    return connected(HurwitzQuery.single(g, mu, r)).value


def euler_suite(grid: GridSpec) -> SuiteResult:
    """Odd and strict partitions are equinumerous; all partitions match the pentagonal count."""
    suite = SuiteResult(name="euler")
    for d in range(grid.euler_degree + 1):
        _run(
            suite,
            f"d={d}",
            lambda d=d: len(enumerate_partitions(d, PartitionClass.ODD))
            == len(enumerate_partitions(d, PartitionClass.STRICT))
            and len(enumerate_partitions(d)) == partition_count(d),
        )
    return suite


def _row_orthogonality(d: int) -> bool:
    table = character_table(d)
    strict = enumerate_partitions(d, PartitionClass.STRICT)
    odd = enumerate_partitions(d, PartitionClass.ODD)
    for rho in strict:
        for sigma in strict:
            total = sum(
                (
                    Rational(table[(rho, mu)] * table[(sigma, mu)], 2**mu.length * z_factor(mu))
                    for mu in odd
                ),
                Rational(0),
            )
            if total != (2 ** parity_delta(rho) if rho == sigma else 0):
                return False
    return True


def _column_orthogonality(d: int) -> bool:
    table = character_table(d)
    strict = enumerate_partitions(d, PartitionClass.STRICT)
    odd = enumerate_partitions(d, PartitionClass.ODD)
    for sigma in odd:
        for rho in odd:
            total = sum(
                (
                    Rational(
                        table[(lam, sigma)] * table[(lam, rho)],
                        2 ** (sigma.length + parity_delta(lam)) * z_factor(sigma),
                    )
                    for lam in strict
                ),
                Rational(0),
            )
            if total != (1 if sigma == rho else 0):
                return False
    return True


def orthogonality_suite(grid: GridSpec) -> SuiteResult:
    """Row and column orthogonality of the Sergeev character table."""
    suite = SuiteResult(name="orthogonality")
    for d in range(1, grid.orthogonality_degree + 1):
        _run(suite, f"rows d={d}", lambda d=d: _row_orthogonality(d))
        _run(suite, f"columns d={d}", lambda d=d: _column_orthogonality(d))
    return suite


def operator_suite(grid: GridSpec) -> SuiteResult:
    """Heisenberg relations, the E-operator algebra, parities and the cut-and-join eigenvalues."""
    suite = SuiteResult(name="operators")
    k = grid.operator_modes
    _run(
        suite,
        f"heisenberg |m| <= {2 * k + 1}",
        lambda: heisenberg_check(2 * k + 1, grid.state_bound),
    )
    for m in range(-k, k + 1):
        _run(suite, f"parity E_{m}", lambda m=m: parity_check(m, grid.z_order, grid.state_bound))
        for n in range(-k, k + 1):
            _run(
                suite,
                f"[E_{m}, E_{n}]",
                lambda m=m, n=n: commutator_check(m, n, grid.z_order, grid.state_bound),
            )
    for r in grid.route_ratios:
        _run(
            suite,
            f"F_{r + 1} eigenvalues",
            lambda r=r: cutjoin_eigenvalue_check(r, grid.state_bound),
        )
    return suite


def _one_part_queries(grid: GridSpec) -> Iterator[HurwitzQuery]:
    for r in grid.route_ratios:
        for g in range(grid.route_max_genus + 1):
            for mu in range(1, grid.route_max_part + 1, 2):
                query = HurwitzQuery.single(g, mu, r)
                if query.structural_zero_reason() is None:
                    yield query


def route_suite(grid: GridSpec) -> SuiteResult:
    """One-part single numbers agree across characters, Fock space and the closed formulas."""
    suite = SuiteResult(name="routes")
    for query in _one_part_queries(grid):
        g, mu, r = query.g, query.mu[0], query.r

        def agree(g: int = g, mu: int = mu, r: int = r) -> bool:
            expected = _characters(g, Partition([mu]), r)
            values = [
                vev_spin_single(g, [mu], r).value,
                one_part_single_fd(g, mu, r).value,
                one_part_single_stirling(g, mu, r).value,
            ]
            if g == 1:
                values.append(one_part_single_genus_one(mu, r).value)
            return all(value == expected for value in values)

        _run(suite, query.label(), agree)
    return suite


def f02_suite(grid: GridSpec) -> SuiteResult:
    """The genus-zero two-point series against connected numbers with two parts."""
    suite = SuiteResult(name="f02")
    for r in (2, 4):
        series = f02_series(r, 2 * grid.f02_max_part)
        for mu1, mu2 in combinations_with_replacement(range(1, grid.f02_max_part + 1, 2), 2):
            mu = Partition([mu1, mu2])
            _run(
                suite,
                f"r={r} mu={mu!r}",
                lambda mu=mu, r=r, series=series: series.coefficient(tuple(mu))
                == _characters(0, mu, r),
            )
    return suite


def tr_suite(grid: GridSpec) -> SuiteResult:
    """Correlator expansions against connected numbers."""
    suite = SuiteResult(name="tr")
    for g, n, r, degree in grid.tr_cases:
        _run(
            suite,
            f"({g},{n}) r={r} degree={degree}",
            lambda g=g, n=n, r=r, degree=degree: check_conjecture(g, n, r, degree).passed,
        )
    return suite


def reduced_suite(grid: GridSpec) -> SuiteResult:
    """``omega_{g,n} = 2^{1-g-n} omega-hat_{g,n}`` at ``r = 2``."""
    suite = SuiteResult(name="reduced")
    for g, n in grid.reduced_cases:
        _run(
            suite,
            f"({g},{n})",
            lambda g=g, n=n: reduced_correlator(g, n, 2).scaled(Rational(2) ** (1 - g - n))
            == correlator(g, n, 2),
        )
    return suite


def _elsv_partitions(max_size: int) -> Iterator[Partition]:
    for d in range(1, max_size + 1):
        for mu in enumerate_partitions(d, PartitionClass.ODD):
            if mu.length <= 2:
                yield mu


def elsv_suite(grid: GridSpec) -> SuiteResult:
    """Spin ELSV values, the CohFT in genus one and the ``r = 2`` double Hodge form."""
    suite = SuiteResult(name="elsv")
    for s in range(1, 7):
        _run(suite, f"bernoulli sum s={s}", lambda s=s: bernoulli_sum_check(s))
        _run(
            suite,
            f"Omega_11 s={s}",
            lambda s=s: omega_class_11(s) == (Rational(s), Rational(1, 2 * s)),
        )
    for g, n in ((1, 1), (2, 1)):
        for k in range(3 * g - 2 + n):
            _run(
                suite,
                f"double Hodge ({g},{n}) psi^{k}",
                lambda g=g, n=n, k=k: double_hodge_integral(g, n, [k] + [0] * (n - 1))
                == omega_integral(g, n, [0] * n, 2, [k] + [0] * (n - 1)),
            )
    for g, r, max_size in grid.elsv_cases:
        for mu in _elsv_partitions(max_size):
            _run(
                suite,
                f"g={g} r={r} mu={mu!r}",
                lambda g=g, r=r, mu=mu: spin_elsv(g, mu, r) == _characters(g, mu, r),
            )
    return suite


def polynomiality_suite(grid: GridSpec) -> SuiteResult:
    """Quasi-polynomiality of single numbers and chamber polynomiality of double numbers."""
    suite = SuiteResult(name="polynomiality")
    if not grid.polynomiality:
        return suite
    for g, n in ((1, 1), (0, 3), (1, 2)):
        _run(
            suite,
            f"quasi ({g},{n}) r=2",
            lambda g=g, n=n: quasi_polynomiality_check(g, n, 2, [0] * n).passed,
        )
    for g, m, n in ((1, 1, 1), (0, 2, 1)):
        _run(
            suite,
            f"chambers g={g} ({m},{n}) r=2",
            lambda g=g, m=m, n=n: piecewise_polynomiality_check(g, m, n, 2).passed,
        )
    return suite


SUITES: dict[str, Callable[[GridSpec], SuiteResult]] = {
    "euler": euler_suite,
    "orthogonality": orthogonality_suite,
    "operators": operator_suite,
    "routes": route_suite,
    "f02": f02_suite,
    "tr": tr_suite,
    "reduced": reduced_suite,
    "elsv": elsv_suite,
    "polynomiality": polynomiality_suite,
}


def run_crosscheck(grid: str = "quick", suites: list[str] | None = None) -> CrosscheckReport:
    """Run the selected suites (all by default) on a named grid.

    Raises:
        ValueError: If the grid or a suite name is unknown.
    """
    if grid not in GRIDS:
        raise ValueError(f"Unknown grid {grid!r}, expected one of {sorted(GRIDS)}")
    names = list(SUITES) if suites is None else suites
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(f"Unknown suites {unknown}, expected names from {list(SUITES)}")
    report = CrosscheckReport(grid=grid)
    for name in names:
        logger.info(f"Running suite {name} on grid {grid}")
        result = SUITES[name](GRIDS[grid])
        if not result.passed:
            logger.warning(f"Suite {name}: {len(result.failures)} of {result.cases} cases failed")
        report.suites.append(result)
    return report
