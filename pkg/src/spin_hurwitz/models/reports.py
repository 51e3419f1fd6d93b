"""Verification reports from the polynomiality fits, the recursion checks and the cross-checks."""

from pydantic import BaseModel, Field


class FitReport(BaseModel):
    """Outcome of fitting a polynomial to sampled values and checking held-out points.

    Attributes:
        polynomial (str): The fitted polynomial, empty when the fit is undetermined.
        degree_bound (int): Largest total degree allowed in the fit.
        fitted_points (list[list[int]]): Points the fit was solved on.
        heldout_points (list[list[int]]): Points evaluated after the fit.
        failures (list[str]): Held-out points (or fit problems) that did not match.
        passed (bool): Whether the fit exists and every held-out point matches.
    """

    polynomial: str = Field(default="")
    degree_bound: int
    fitted_points: list[list[int]] = Field(default_factory=list)
    heldout_points: list[list[int]] = Field(default_factory=list)
    failures: list[str] = Field(default_factory=list)
    passed: bool = Field(default=False)


class QuasiPolynomialityReport(BaseModel):
    """Fit of connected single numbers, with the ``mu^[mu]/[mu]!`` prefactor stripped.

    Attributes:
        g (int): Genus.
        n (int): Number of parts.
        r (int): Completed-cycle parameter.
        residues (list[int]): The fixed residues ``<mu_i>`` in ``0..s-1``.
        fit (FitReport): The polynomial fit in the variables ``mu_1, ..., mu_n``.
    """

    g: int
    n: int
    r: int
    residues: list[int]
    fit: FitReport

    @property
    def passed(self) -> bool:
        """Whether the fit held on every held-out point."""
        return self.fit.passed


class ChamberFit(BaseModel):
    """Polynomial fit inside one chamber of the resonance arrangement.

    Attributes:
        signs (list[int]): Sign of ``|mu_I| - |nu_J|`` for every wall, identifying the chamber.
        fit (FitReport): The per-chamber fit.
        parity_ok (bool): Whether only homogeneous degrees ``D, D-2, ...`` occur.
        breaks_across_wall (bool | None): Whether the fit fails on a neighbouring chamber; None when
            there is no neighbour.
    """

    signs: list[int]
    fit: FitReport
    parity_ok: bool = Field(default=True)
    breaks_across_wall: bool | None = Field(default=None)


class PiecewisePolynomialityReport(BaseModel):
    """Chamber-by-chamber fit of connected double numbers with ``l(mu) = m``, ``l(nu) = n``.

    Attributes:
        g (int): Genus.
        m (int): Number of parts of ``mu``.
        n (int): Number of parts of ``nu``.
        r (int): Completed-cycle parameter.
        degree_bound (int): ``2g - 1 + b``.
        walls (list[str]): The walls ``|mu_I| = |nu_J|`` of the arrangement.
        chambers (list[ChamberFit]): One entry per chamber met by the samples.
    """

    g: int
    m: int
    n: int
    r: int
    degree_bound: int
    walls: list[str] = Field(default_factory=list)
    chambers: list[ChamberFit] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Whether every chamber fits and has the expected degree parity."""
        return bool(self.chambers) and all(c.fit.passed and c.parity_ok for c in self.chambers)


class ConjectureReport(BaseModel):
    """Comparison of correlator expansions with connected spin single Hurwitz numbers.

    Attributes:
        g (int): Genus.
        n (int): Number of points.
        r (int): Completed-cycle parameter.
        degree (int): Largest ``|mu|`` compared.
        compared (int): Number of ordered ``mu`` checked, even parts included.
        mismatches (list[str]): ``mu: expansion != expected`` for every failing cell.
    """

    g: int
    n: int
    r: int
    degree: int
    compared: int = Field(default=0)
    mismatches: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Whether at least one cell was compared and none failed."""
        return self.compared > 0 and not self.mismatches


class SuiteResult(BaseModel):
    """Outcome of one property suite.

    Attributes:
        name (str): Suite identifier.
        cases (int): Number of checked cases.
        failures (list[str]): Description of every failing case.
    """

    name: str
    cases: int = Field(default=0)
    failures: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Whether no case failed."""
        return not self.failures

    def check(self, ok: bool, case: str) -> None:
        """Count a case and record it when it failed."""
        self.cases += 1
        if not ok:
            self.failures.append(case)


class CrosscheckReport(BaseModel):
    """Machine-readable result of a cross-check run.

    Attributes:
        grid (str): Name of the grid that was run.
        suites (list[SuiteResult]): One entry per suite, in run order.
    """

    grid: str
    suites: list[SuiteResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Whether every suite passed."""
        return all(suite.passed for suite in self.suites)

    def summary(self) -> dict[str, object]:
        """Plain dictionary with a top-level pass flag, for JSON output."""
        return {
            "grid": self.grid,
            "passed": self.passed,
            "suites": [
                {**suite.model_dump(), "passed": suite.passed} for suite in self.suites
            ],
        }
