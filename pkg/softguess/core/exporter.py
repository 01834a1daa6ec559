"""
Export Manager - writes reports as JSON documents and tables as CSV.

Reports are dataclasses or plain dicts. Floats are rounded to a fixed
number of significant digits, the comparison precision of golden files.
"""

import csv
import io
import json
import math
import os
import sys
from dataclasses import asdict, is_dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence

import numpy as np

from ..config import SIGNIFICANT_DIGITS


def round_value(value: Any, digits: int = SIGNIFICANT_DIGITS) -> Any:
    """
    Round every float inside a report to ``digits`` significant digits.

    Dataclasses become dicts, tuples and arrays become lists, numpy scalars
    become Python numbers. Non-finite floats are kept as strings ("inf",
    "nan") so the JSON stays standard.
    """
    if is_dataclass(value) and not isinstance(value, type):
        return round_value(asdict(value), digits)
    if isinstance(value, dict):
        return {str(k): round_value(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_value(v, digits) for v in value]
    if isinstance(value, np.ndarray):
        return [round_value(v, digits) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            return str(value)
        return float(format(value, f".{digits}g"))
    return value


def format_cell(value: Any, digits: int = SIGNIFICANT_DIGITS) -> str:
    """One CSV cell: integers as is, floats with ``digits`` significant digits."""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), f".{digits}g")
    return str(value)


def _emit(text: str, out: Optional[str]) -> str:
    if out is None:
        sys.stdout.write(text)
        return "-"
    directory = os.path.dirname(out)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(out, 'w', encoding='utf-8', newline='') as f:
        f.write(text)
    return out


def to_json(report: Any, digits: int = SIGNIFICANT_DIGITS) -> str:
    return json.dumps(round_value(report, digits), indent=2, ensure_ascii=False) + "\n"


def export_json(report: Any, out: Optional[str] = None,
                digits: int = SIGNIFICANT_DIGITS) -> str:
    """
    Write a report as indented JSON.

    Args:
        report: Dataclass or dict
        out: Output path, or None for stdout

    Returns:
        The path written, or "-" for stdout
    """
    return _emit(to_json(report, digits), out)


def to_csv(columns: Sequence[str], rows: Iterable[Sequence[Any]],
           digits: int = SIGNIFICANT_DIGITS) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        if len(row) != len(columns):
            raise ValueError(f"Row has {len(row)} cells, header has {len(columns)}")
        writer.writerow([format_cell(v, digits) for v in row])
    return buffer.getvalue()


def export_csv(columns: Sequence[str], rows: Iterable[Sequence[Any]],
               out: Optional[str] = None, digits: int = SIGNIFICANT_DIGITS) -> str:
    """Write a table with a header row in the given column order."""
    return _emit(to_csv(columns, rows, digits), out)


def load_json_report(path: str) -> Dict[str, Any]:
    """Read back a report written by export_json."""
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)


def load_csv_table(path: str) -> List[Dict[str, str]]:
    """Read back a table written by export_csv as a list of row dicts."""
    with open(path, 'r', encoding='utf-8', newline='') as f:
        return list(csv.DictReader(f))
