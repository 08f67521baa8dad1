"""Module containing the flat-file output helpers."""
from __future__ import annotations

import os
import tempfile
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

if TYPE_CHECKING:
    from os import PathLike

__all__ = ["CSV_DIGITS", "format_value", "write_csv", "write_atomic"]

CSV_DIGITS = 17


def format_value(value: object) -> str:
    """Format a CSV cell, floats are written with 17 significant digits."""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), f".{CSV_DIGITS}g")
    return str(value)


def write_atomic(path: str | PathLike, content: str) -> Path:
    """Write text to a file by writing a temporary file and renaming it.

    Explanation
    -----------
    The temporary file is created in the target directory, such that the final
    :func:`os.replace` is atomic. Lines are terminated by LF on every platform.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.",
                                    suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as file:
            file.write(content)
        os.replace(tmp_name, path)
    except BaseException:
        Path(tmp_name).unlink(missing_ok=True)
        raise
    return path


def write_csv(path: str | PathLike, header: Sequence[str],
              rows: Iterable[Sequence[object]]) -> Path:
    """Write a comma-separated file with a header row.

    Parameters
    ----------
    path : str | PathLike
        Destination of the file.
    header : Sequence[str]
        Column names.
    rows : Iterable[Sequence[object]]
        Rows of values, formatted with :func:`format_value`.

    Returns
    -------
    Path
        Path of the written file.
    """
    lines = [",".join(header)]
    for row in rows:
        if len(row) != len(header):
            raise ValueError(f"Row {row!r} does not match the header {header!r}.")
        lines.append(",".join(format_value(value) for value in row))
    return write_atomic(path, "\n".join(lines) + "\n")
