"""Serialization of result records: human table, CSV and JSON."""

import csv
import io
import json
from collections.abc import Sequence

from spin_hurwitz.models.hurwitz import ResultRecord

CSV_HEADER = ("r", "g", "mu", "nu", "method", "value", "status")
FORMATS = ("table", "csv", "json")


def _profile(parts: Sequence[int] | None) -> str:
    if parts is None:
        return ""
    return "(" + ",".join(str(p) for p in parts) + ")"


def _row(record: ResultRecord) -> list[str]:
    return [
        str(record.r),
        str(record.g),
        _profile(record.mu),
        _profile(record.nu),
        record.method,
        record.value,
        record.status.value,
    ]


def records_to_csv(records: Sequence[ResultRecord]) -> str:
    """CSV with the header ``r,g,mu,nu,method,value,status``."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(_row(record) for record in records)
    return buffer.getvalue()


def records_to_json(records: Sequence[ResultRecord]) -> str:
    """JSON array of records with the field order of ``ResultRecord``."""
    return json.dumps([record.model_dump(mode="json") for record in records], indent=2) + "\n"


def records_to_table(records: Sequence[ResultRecord]) -> str:
    """Left-aligned plain-text table."""
    rows = [list(CSV_HEADER)] + [_row(record) for record in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(CSV_HEADER))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def render_records(records: Sequence[ResultRecord], output_format: str) -> str:
    """Render records in one of ``table``, ``csv`` or ``json``.

    Raises:
        ValueError: If the format is unknown.
    """
    if output_format == "csv":
        return records_to_csv(records)
    if output_format == "json":
        return records_to_json(records)
    if output_format == "table":
        return records_to_table(records)
    raise ValueError(f"Unknown format {output_format!r}, expected one of {FORMATS}")
