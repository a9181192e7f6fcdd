"""Output formatting and parsing of rectangles as text, CSV and JSON."""

import csv
import io
import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from .core import Params, SparseRectangle
from .errors import RectangleParseError

EMPTY_CELL = "·"


def format_output(
    rect: SparseRectangle, format_type: str, params: Optional[Params] = None
) -> str:
    """
    Format a rectangle for output.

    Args:
        rect: Rectangle to render
        format_type: "text", "csv" or "json"
        params: Parameters to record in the JSON header

    Returns:
        Formatted string output
    """
    format_type = format_type.lower()
    if format_type == "csv":
        return format_as_csv(rect)
    if format_type == "json":
        return format_as_json(rect, params)
    return format_as_text(rect)


def format_as_csv(rect: SparseRectangle) -> str:
    """One line per row, empty cells as empty fields, no header."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for row in rect.to_rows():
        writer.writerow(["" if value is None else value for value in row])
    return buffer.getvalue()


def format_as_json(rect: SparseRectangle, params: Optional[Params] = None) -> str:
    """Canonical JSON: header fields, then the filled cells sorted by (row, col)."""
    k = params.k if params else len(rect.row(0)) if rect.rows else 0
    s = params.s if params else 3
    document: Dict[str, Any] = {
        "m": rect.rows,
        "n": rect.cols,
        "k": k,
        "s": s,
        "cells": [
            {"row": row, "col": col, "value": value}
            for row, col, value in rect.entries()
        ],
    }
    return json.dumps(document, indent=2) + "\n"


def format_as_text(rect: SparseRectangle) -> str:
    """Aligned grid with a dot in every empty cell."""
    cells = [
        [EMPTY_CELL if value is None else str(value) for value in row]
        for row in rect.to_rows()
    ]
    width = max((len(cell) for row in cells for cell in row), default=1)
    lines = [" ".join(cell.rjust(width) for cell in row) for row in cells]
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> SparseRectangle:
    """
    Parse the CSV layout written by format_as_csv.

    Raises:
        RectangleParseError: If a field is not an integer or rows differ in length
    """
    rows: List[List[Optional[int]]] = []
    for line_num, record in enumerate(csv.reader(io.StringIO(text)), 1):
        if not record:
            continue
        row = []
        for field in record:
            field = field.strip()
            if not field:
                row.append(None)
                continue
            try:
                row.append(int(field))
            except ValueError:
                raise RectangleParseError(
                    f"line {line_num}: {field!r} is not an integer"
                )
        rows.append(row)
    if not rows:
        raise RectangleParseError("no rows found")
    widths = {len(row) for row in rows}
    if len(widths) != 1:
        raise RectangleParseError(f"rows have different lengths: {sorted(widths)}")
    return SparseRectangle.from_rows(rows)


def parse_json(text: str) -> SparseRectangle:
    """
    Parse the JSON layout written by format_as_json.

    Raises:
        RectangleParseError: If the document is malformed
    """
    try:
        document = json.loads(text)
        rows, cols = int(document["m"]), int(document["n"])
        cells = {}
        for cell in document["cells"]:
            key = (int(cell["row"]), int(cell["col"]))
            if key in cells:
                raise RectangleParseError(f"cell {key} listed twice")
            cells[key] = int(cell["value"])
    except RectangleParseError:
        raise
    except (ValueError, KeyError, TypeError) as e:
        raise RectangleParseError(f"malformed rectangle document: {e}")
    try:
        return SparseRectangle(rows, cols, cells)
    except (ValueError, IndexError, TypeError) as e:
        raise RectangleParseError(str(e))


def read_rectangle(file_path: str) -> SparseRectangle:
    """
    Read a rectangle from a .json or CSV file.

    Raises:
        RectangleParseError: If the file is missing, unreadable or malformed
    """
    path = Path(file_path)
    if not path.is_file():
        raise RectangleParseError(f"File not found: {file_path}")
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise RectangleParseError(f"Failed to read {file_path}: {e}")
    if path.suffix.lower() == ".json" or text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_csv(text)
