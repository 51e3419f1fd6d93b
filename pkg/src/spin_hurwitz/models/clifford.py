"""States of the neutral-fermion Fock space."""

from collections.abc import Iterable, Mapping
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field
from sympy import Rational

# A monomial phi_{i_1} ... phi_{i_k} |0> with i_1 > ... > i_k >= 0.
CliffordMonomial = tuple[int, ...]

VACUUM: CliffordMonomial = ()


def monomial_of(lam: Iterable[int]) -> CliffordMonomial:
    """Monomial of a strict partition, with index 0 appended for odd length."""
    parts = tuple(sorted(lam, reverse=True))
    return parts + (0,) if len(parts) % 2 else parts


def energy(monomial: CliffordMonomial) -> int:
    """Sum of the indices of a monomial."""
    return sum(monomial)


class CliffordState:
    """A finite rational combination of canonical monomials applied to the vacuum."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[CliffordMonomial, object] | None = None) -> None:
        """Build a state, dropping zero coefficients.

        Raises:
            ValueError: If a monomial is not strictly decreasing with indices >= 0.
        """
        cleaned: dict[CliffordMonomial, Rational] = {}
        for monomial, value in (terms or {}).items():
            key = tuple(monomial)
            if any(a <= b for a, b in zip(key, key[1:], strict=False)) or (key and key[-1] < 0):
                raise ValueError(f"Non-canonical monomial {key}")
            coefficient = Rational(value)
            if coefficient != 0:
                cleaned[key] = coefficient
        self.terms = cleaned

    @classmethod
    def vacuum(cls) -> "CliffordState":
        """The vacuum vector."""
        return cls({VACUUM: 1})

    @classmethod
    def basis(cls, monomial: Iterable[int]) -> "CliffordState":
        """A single monomial with coefficient one."""
        return cls({tuple(monomial): 1})

    @property
    def is_zero(self) -> bool:
        """Whether the state vanishes."""
        return not self.terms

    def coefficient(self, monomial: Iterable[int]) -> Rational:
        """Coefficient of a monomial (zero when absent)."""
        return self.terms.get(tuple(monomial), Rational(0))

    def max_energy(self) -> int:
        """Largest energy of a stored monomial (zero for the empty state)."""
        return max((energy(m) for m in self.terms), default=0)

    def __add__(self, other: "CliffordState") -> "CliffordState":
        """Sum of two states."""
        result = dict(self.terms)
        for monomial, c in other.terms.items():
            result[monomial] = result.get(monomial, Rational(0)) + c
        return CliffordState(result)

    def __sub__(self, other: "CliffordState") -> "CliffordState":
        """Difference of two states."""
        return self + other.scale(-1)

    def scale(self, factor: object) -> "CliffordState":
        """Multiply every coefficient by a rational factor."""
        f = Rational(factor)
        return CliffordState({m: f * c for m, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        """Equality of the stored terms."""
        if not isinstance(other, CliffordState):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        """Hash of the frozen term set."""
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        """Readable sum of monomials."""
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{list(m)}" for m, c in sorted(self.terms.items(), reverse=True))


class OperatorKind(str, Enum):
    """The quadratic fermionic operators the engine can apply."""

    F = "F"
    F_NORMAL = "F_normal"
    ALPHA = "alpha"
    CUT_JOIN = "cut_join"
    E = "E"
    E_HAT_ZERO = "E_hat_0"


class QuadraticOperator(BaseModel):
    """Description of one quadratic operator, applied by ``fock.apply_operator``.

    Attributes:
        kind (OperatorKind): Which family the operator belongs to.
        j (int): First index of ``F_{j,k}``, or the ``z``-order of a truncated ``E`` operator.
        k (int): Second index of ``F_{j,k}``.
        m (int): Mode of ``alpha_m`` and ``E_m``.
        r (int): Even parameter of the cut-and-join operator ``F_{r+1}``.
    """

    model_config = ConfigDict(frozen=True)

    kind: OperatorKind
    j: int = Field(default=0)
    k: int = Field(default=0)
    m: int = Field(default=0)
    r: int = Field(default=0)
