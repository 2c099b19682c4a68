"""
CSV Writer: deterministic tabular output.

Files are UTF-8 with `\n` line endings; numbers use 9 significant digits and
booleans are written as `true`/`false`, so identical rows always produce
byte-identical files.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path
from typing import Iterable, Sequence, Union

from src.infrastructure.exceptions import FileOperationError
from src.infrastructure.logger import get_logger

logger = get_logger(__name__)

Cell = Union[str, int, float, bool, None]


def format_cell(value: Cell) -> str:
    """Render one value in the canonical CSV text form."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return f"{value:.9g}"
    return str(value)


def write_csv(path: Path, header: Sequence[str], records: Iterable[Sequence[Cell]]) -> Path:
    """
    Write a header and records to path, creating parent directories.

    Args:
        path: Output file
        header: Column names
        records: Rows of cell values, in output order

    Returns:
        The written path

    Raises:
        FileOperationError: If the file cannot be written
    """
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            count = 0
            for record in records:
                if len(record) != len(header):
                    raise ValueError(f"record has {len(record)} cells, header has {len(header)}")
                writer.writerow([format_cell(cell) for cell in record])
                count += 1
    except (OSError, ValueError) as e:
        raise FileOperationError(f"Failed to write {path}: {e}") from e

    logger.info(f"Wrote {count} rows to {path}")
    return path
