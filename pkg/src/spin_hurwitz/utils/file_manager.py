"""File output for tables and reports."""

from pathlib import Path

import click


def write_text_file(file_path: str | Path, content: str) -> bool:
    """Write text content to file.

    Args:
        file_path: Path where to write the file.
        content: Text content to write.

    Returns:
        True if writing was successful.
    """
    try:
        path = Path(file_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8")
        return True
    except OSError as e:
        click.echo(f"Error writing file {file_path}: {e}", err=True)
        return False
