"""Embedded reference tables and their regeneration."""

import json
from functools import lru_cache
from importlib import resources

from loguru import logger
from pydantic import ValidationError

from spin_hurwitz.models.golden import GoldenData, GoldenDiff
from spin_hurwitz.models.hurwitz import ResultRecord, format_rational
from spin_hurwitz.services.routes import evaluate

PRESETS = {"appendixB": "appendix_b.json"}


@lru_cache(maxsize=None)
def load_golden(preset: str = "appendixB") -> GoldenData:
    """Read and validate the data file of a preset.

    Raises:
        ValueError: If the preset is unknown or its file is malformed.
    """
    if preset not in PRESETS:
        raise ValueError(f"Unknown preset {preset!r}, expected one of {sorted(PRESETS)}")
    source = resources.files("spin_hurwitz").joinpath("data", PRESETS[preset])
    try:
        data = GoldenData.model_validate(json.loads(source.read_text(encoding="utf-8")))
    except (json.JSONDecodeError, ValidationError) as e:
        raise ValueError(f"Malformed golden file {PRESETS[preset]}: {e}") from e
    logger.debug(f"Loaded {preset} v{data.version}: {len(data.tables)} tables")
    return data


def regenerate_table(
    preset: str = "appendixB", r: int | None = None, method: str = "characters"
) -> tuple[list[ResultRecord], list[GoldenDiff]]:
    """Recompute every cell of a preset, optionally restricted to one ``r``.

    Returns:
        The records in sorted order and one diff entry per cell.

    Raises:
        ValueError: If the preset or method is unknown, or no table has the given ``r``.
    """
    data = load_golden(preset)
    tables = [table for table in data.tables if r is None or table.r == r]
    if not tables:
        raise ValueError(f"Preset {preset} has no table for r={r}, available {data.ratios()}")
    records: list[ResultRecord] = []
    diffs: list[GoldenDiff] = []
    for table in tables:
        logger.debug(f"Regenerating {table.caption!r}, r={table.r}")
        for query, cell in table.queries():
            result = evaluate(query, method)
            records.append(ResultRecord.from_value(query, method, result))
            diffs.append(
                GoldenDiff(
                    r=table.r,
                    g=cell.g,
                    mu=cell.mu,
                    expected=format_rational(cell.expected),
                    computed=format_rational(result.value),
                    corrected=cell.corrected is not None,
                )
            )
    records.sort(key=ResultRecord.sort_key)
    mismatches = [diff for diff in diffs if not diff.matches]
    for diff in mismatches:
        logger.warning(f"r={diff.r} g={diff.g} mu={diff.mu}: {diff.computed} != {diff.expected}")
    logger.info(f"{preset}: {len(diffs)} cells regenerated, {len(mismatches)} mismatches")
    return records, diffs
