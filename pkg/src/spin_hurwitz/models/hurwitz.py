"""Query, value and result records for spin Hurwitz numbers."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator
from sympy import Rational

from spin_hurwitz.models.partition import Partition


class HurwitzStatus(str, Enum):
    """How a value was obtained."""

    OK = "ok"
    STRUCTURAL_ZERO = "structural-zero"
    METHOD_UNAVAILABLE = "method-unavailable"


class ScopeError(ValueError):
    """A method was asked for a (g, n) outside the range it supports."""


class HurwitzQuery(BaseModel):
    """A spin Hurwitz number request.

    Single numbers leave ``nu`` unset; the Riemann-Hurwitz count of completed cycles is then
    ``b = (2g - 2 + l(mu) + |mu|) / r``, and ``(2g - 2 + l(mu) + l(nu)) / r`` for double numbers.

    Attributes:
        g (int): Genus of the cover.
        r (int): Positive even integer, the cycles are (r+1)-completed.
        mu (Partition): Ramification profile over zero.
        nu (Partition | None): Ramification profile over infinity for double numbers.
        connected (bool): Whether only connected covers are counted.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    g: int = Field(..., ge=0)
    r: int = Field(..., gt=0)
    mu: Partition
    nu: Partition | None = Field(default=None)
    connected: bool = Field(default=True)

    @field_validator("r")
    @classmethod
    def _r_even(cls, value: int) -> int:
        if value % 2:
            raise ValueError(f"r must be even, got {value}")
        return value

    @field_validator("mu", "nu", mode="before")
    @classmethod
    def _as_partition(cls, value: object) -> Partition | None:
        if value is None:
            return None
        if isinstance(value, int):
            return Partition([value])
        return Partition(value)  # type: ignore[arg-type]

    @classmethod
    def single(cls, g: int, mu: object, r: int, connected: bool = True) -> "HurwitzQuery":
        """Query for a single number ``h_{g;mu}``."""
        return cls(g=g, r=r, mu=mu, connected=connected)

    @classmethod
    def double(
        cls, g: int, mu: object, nu: object, r: int, connected: bool = True
    ) -> "HurwitzQuery":
        """Query for a double number ``h_{g;mu,nu}``.

        Raises:
            ValueError: If the two profiles have different sizes.
        """
        query = cls(g=g, r=r, mu=mu, nu=nu, connected=connected)
        assert query.nu is not None
        if query.mu.size != query.nu.size:
            raise ValueError(
                f"Profiles must have the same size, got |{query.mu!r}| = {query.mu.size} "
                f"and |{query.nu!r}| = {query.nu.size}"
            )
        return query

    @property
    def is_double(self) -> bool:
        """Whether a profile over infinity is given."""
        return self.nu is not None

    @property
    def degree(self) -> int:
        """Degree of the cover, ``|mu|``."""
        return self.mu.size

    def structural_zero_reason(self) -> str | None:
        """Explain why no cover exists, or return None when the count can be nonzero."""
        if not self.mu.is_odd or (self.nu is not None and not self.nu.is_odd):
            return "even part: spin covers only have odd ramification"
        if self.nu is not None and self.nu.size != self.mu.size:
            return f"degree mismatch |mu| = {self.mu.size} != |nu| = {self.nu.size}"
        numerator = self._riemann_hurwitz_numerator()
        if numerator < 0 or numerator % self.r:
            return f"b = {numerator}/{self.r} is not a non-negative integer"
        return None

    def branch_points(self) -> int:
        """Number ``b`` of completed cycles.

        Raises:
            ValueError: If the query has a structural zero.
        """
        reason = self.structural_zero_reason()
        if reason is not None:
            raise ValueError(f"No covers for {self.label()}: {reason}")
        return self._riemann_hurwitz_numerator() // self.r

    def _riemann_hurwitz_numerator(self) -> int:
        other = self.nu.length if self.nu is not None else self.mu.size
        return 2 * self.g - 2 + self.mu.length + other

    def label(self) -> str:
        """Short human-readable key such as ``g=1 r=2 mu=(3)``."""
        text = f"g={self.g} r={self.r} mu={self.mu!r}"
        if self.nu is not None:
            text += f" nu={self.nu!r}"
        return text


class HurwitzValue(BaseModel):
    """An exact value together with its provenance status.

    Attributes:
        value (Rational): The number; zero for structural zeros.
        status (HurwitzStatus): Whether it was computed or is a structural zero.
        reason (str | None): Why a structural zero or unavailable method was reported.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    value: Rational = Field(default_factory=lambda: Rational(0))
    status: HurwitzStatus = Field(default=HurwitzStatus.OK)
    reason: str | None = Field(default=None)

    @field_validator("value", mode="before")
    @classmethod
    def _as_rational(cls, value: object) -> Rational:
        return Rational(value)  # type: ignore[arg-type]

    @classmethod
    def computed(cls, value: object) -> "HurwitzValue":
        """A computed value."""
        return cls(value=value)

    @classmethod
    def structural_zero(cls, reason: str) -> "HurwitzValue":
        """A zero that comes from the absence of covers, not from cancellation."""
        return cls(status=HurwitzStatus.STRUCTURAL_ZERO, reason=reason)

    @classmethod
    def unavailable(cls, reason: str) -> "HurwitzValue":
        """A method that cannot evaluate the query."""
        return cls(status=HurwitzStatus.METHOD_UNAVAILABLE, reason=reason)

    @property
    def is_structural_zero(self) -> bool:
        """Whether the value is a structural zero."""
        return self.status is HurwitzStatus.STRUCTURAL_ZERO


def format_rational(value: Rational) -> str:
    """Serialize an exact rational as ``p/q`` (``p`` alone when the denominator is one)."""
    value = Rational(value)
    return str(value.p) if value.q == 1 else f"{value.p}/{value.q}"


class ResultRecord(BaseModel):
    """One row of command-line output.

    Attributes:
        r (int): Completed-cycle parameter.
        g (int): Genus.
        mu (list[int]): Profile over zero.
        nu (list[int] | None): Profile over infinity for double numbers.
        method (str): Route identifier (characters, fock, closed, tr, elsv).
        value (str): Exact rational in lowest terms, ``p/q``.
        status (HurwitzStatus): ok, structural-zero or method-unavailable.
    """

    r: int
    g: int
    mu: list[int]
    nu: list[int] | None = Field(default=None)
    method: str
    value: str
    status: HurwitzStatus

    @classmethod
    def from_value(cls, query: HurwitzQuery, method: str, result: HurwitzValue) -> "ResultRecord":
        """Build a record from a query and the value a method returned."""
        return cls(
            r=query.r,
            g=query.g,
            mu=list(query.mu),
            nu=list(query.nu) if query.nu is not None else None,
            method=method,
            value=format_rational(result.value),
            status=result.status,
        )

    def sort_key(self) -> tuple:
        """Deterministic ordering key: query first, then method."""
        return (self.r, self.g, len(self.mu), self.mu, self.nu or [], self.method)
