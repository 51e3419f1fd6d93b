"""Output helpers."""

from .file_manager import write_text_file
from .formatting import records_to_csv, records_to_json, records_to_table, render_records

__all__ = [
    "records_to_csv",
    "records_to_json",
    "records_to_table",
    "render_records",
    "write_text_file",
]
