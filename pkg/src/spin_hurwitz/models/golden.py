"""Records of the embedded reference tables and of their regeneration."""

from pydantic import BaseModel, Field
from sympy import Rational

from spin_hurwitz.models.hurwitz import HurwitzQuery


class GoldenCell(BaseModel):
    """One tabulated connected single number.

    Attributes:
        g (int): Genus.
        mu (list[int]): Ramification profile.
        value (str): The value as printed, ``p/q``.
        corrected (str | None): Replacement for a misprinted value.
        note (str | None): Why the value was corrected.
    """

    g: int = Field(..., ge=0)
    mu: list[int]
    value: str
    corrected: str | None = Field(default=None)
    note: str | None = Field(default=None)

    @property
    def expected(self) -> Rational:
        """The value the regeneration has to reproduce."""
        return Rational(self.corrected if self.corrected is not None else self.value)


class GoldenTable(BaseModel):
    """A block of cells sharing ``r``, with the caption it was transcribed from.

    Attributes:
        caption (str): Caption of the source table.
        r (int): Completed-cycle parameter.
        cells (list[GoldenCell]): The tabulated numbers.
    """

    caption: str
    r: int = Field(..., gt=0)
    cells: list[GoldenCell] = Field(default_factory=list)

    def queries(self) -> list[tuple[HurwitzQuery, GoldenCell]]:
        """Connected single queries, paired with their cells."""
        return [(HurwitzQuery.single(cell.g, cell.mu, self.r), cell) for cell in self.cells]


class GoldenData(BaseModel):
    """The versioned reference file.

    Attributes:
        version (int): File format version.
        description (str): What the values are.
        tables (list[GoldenTable]): The tables in file order.
    """

    version: int
    description: str = Field(default="")
    tables: list[GoldenTable] = Field(default_factory=list)

    def ratios(self) -> list[int]:
        """Values of ``r`` present, sorted."""
        return sorted({table.r for table in self.tables})


class GoldenDiff(BaseModel):
    """Regenerated value of one cell next to the tabulated one.

    Attributes:
        r (int): Completed-cycle parameter.
        g (int): Genus.
        mu (list[int]): Profile.
        expected (str): Tabulated value (after correction).
        computed (str): Regenerated value.
        corrected (bool): Whether the tabulated value was a corrected misprint.
    """

    r: int
    g: int
    mu: list[int]
    expected: str
    computed: str
    corrected: bool = Field(default=False)

    @property
    def matches(self) -> bool:
        """Exact equality."""
        return self.expected == self.computed
