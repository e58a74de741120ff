"""CSV output for list-of-record payloads."""

import csv
import json
from io import StringIO
from typing import Any, Iterable

from src.logging_config import get_logger
from src.reporter.json_reporter import ExactEncoder

logger = get_logger("reporter.csv_reporter")


def _cell(value: Any) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    return json.dumps(value, cls=ExactEncoder, sort_keys=True, separators=(",", ":"))


def _records(payload: Any) -> list[dict[str, Any]]:
    """Normalize a payload into a list of flat dictionaries."""
    encoded = json.loads(json.dumps(payload, cls=ExactEncoder))
    if isinstance(encoded, dict):
        rows = encoded.get("rows")
        if isinstance(rows, list):
            encoded = rows
        else:
            encoded = [encoded]
    if not isinstance(encoded, list):
        return [{"value": encoded}]
    return [row if isinstance(row, dict) else {"value": row} for row in encoded]


def emit_csv(payload: Any, columns: Iterable[str] = ()) -> str:
    """
    Flatten a payload into CSV text.

    Nested values are written as compact JSON inside the cell. Columns are
    the given ones followed by any remaining keys in sorted order.

    Args:
        payload: A list of records, or a dict with a 'rows' list
        columns: Preferred leading columns

    Returns:
        CSV text with a header row
    """
    records = _records(payload)
    header = list(columns)
    for key in sorted({k for row in records for k in row}):
        if key not in header:
            header.append(key)
    buffer = StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in records:
        writer.writerow([_cell(row[k]) if k in row else "" for k in header])
    logger.debug(f"CSV: {len(records)} rows, {len(header)} columns")
    return buffer.getvalue()


class CSVReporter:
    """Reporter for generating CSV tables."""

    def __init__(self, columns: Iterable[str] = ()):
        self.columns = tuple(columns)

    def generate(self, payload: Any) -> str:
        return emit_csv(payload, self.columns)
