"""Reporter module for emitting table envelopes as JSON or CSV."""

from pathlib import Path

from src.reporter.csv_reporter import CSVReporter, emit_csv
from src.reporter.json_reporter import (
    ExactEncoder,
    JSONReporter,
    build_provenance,
    create_envelope,
    emit_json,
    parse_envelope,
    parse_fraction,
)

SCHEMA_PATH = Path(__file__).with_name("envelope.schema.json")

__all__ = [
    # JSON
    "ExactEncoder",
    "JSONReporter",
    "build_provenance",
    "create_envelope",
    "emit_json",
    "parse_envelope",
    "parse_fraction",
    "SCHEMA_PATH",
    # CSV
    "CSVReporter",
    "emit_csv",
]
