"""Tests for the reporter module."""

import csv
import json
from fractions import Fraction
from io import StringIO

import pytest

from src.errors import LabelError
from src.exactalg.cyclotomic import CycLaurent
from src.exactalg.partitions import Partition
from src.models import RunConfig, TableEnvelope
from src.reporter import (
    SCHEMA_PATH,
    CSVReporter,
    ExactEncoder,
    JSONReporter,
    create_envelope,
    emit_csv,
    emit_json,
    parse_envelope,
    parse_fraction,
)


class TestExactEncoder:
    """Tests for the JSON encoder."""

    def test_fraction(self):
        """Test that fractions become 'p/q' strings."""
        assert json.dumps(Fraction(-3, 8), cls=ExactEncoder) == '"-3/8"'
        assert parse_fraction("-3/8") == Fraction(-3, 8)

    def test_partition(self):
        """Test that partitions become lists of parts."""
        assert json.loads(json.dumps(Partition((3, 1)), cls=ExactEncoder)) == [3, 1]

    def test_cyclotomic(self):
        """Test that Laurent values use their dictionary form."""
        value = CycLaurent.u_power(2) * Fraction(1, 2)
        encoded = json.loads(json.dumps(value, cls=ExactEncoder))
        assert encoded == json.loads(json.dumps(value.to_dict(), cls=ExactEncoder))

    def test_unknown_type(self):
        """Test that unsupported objects still fail."""
        with pytest.raises(TypeError):
            json.dumps(object(), cls=ExactEncoder)


class TestEnvelope:
    """Tests for the self-describing envelope."""

    def test_keys(self, default_config):
        """Test the top-level envelope keys."""
        envelope = create_envelope("springer", {"n": 2}, default_config)
        assert set(envelope) == {
            "command",
            "config",
            "schema_version",
            "provenance",
            "payload",
            "report_metadata",
        }
        assert envelope["payload"] == {"n": 2}
        assert envelope["provenance"]["zeta_other"] == "symbolic"

    def test_deterministic(self, default_config):
        """Test that emitting twice gives identical text."""
        envelope = create_envelope("green kostka", {"b": 1, "a": Fraction(1, 3)}, default_config)
        first = emit_json(envelope)
        assert first == emit_json(envelope)
        assert first.index('"a"') < first.index('"b"')

    def test_parse(self, default_config):
        """Test reading an emitted envelope back."""
        text = emit_json(create_envelope("verify", [1, 2], default_config))
        envelope = parse_envelope(text)
        assert envelope.command == "verify"
        assert envelope.payload == [1, 2]
        assert envelope.config["nu_sign"] == 1

    def test_parse_rejects_garbage(self):
        """Test that non-JSON input is refused."""
        with pytest.raises(LabelError):
            parse_envelope("not json")

    def test_schema_file(self):
        """Test that the shipped schema mirrors the envelope model."""
        shipped = json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))
        model = TableEnvelope.model_json_schema()
        assert set(shipped["properties"]) == set(model["properties"])
        assert shipped["required"] == model["required"]


class TestJSONReporter:
    """Tests for the JSON reporter class."""

    def test_save(self, tmp_path, default_config):
        """Test writing an envelope to disk."""
        reporter = JSONReporter(config=default_config)
        path = reporter.save("sheaves census", {"count": 2}, tmp_path / "out" / "census.json")
        assert path.exists()
        envelope = parse_envelope(path.read_text(encoding="utf-8"))
        assert envelope.payload == {"count": 2}

    def test_compact(self):
        """Test output without indentation."""
        reporter = JSONReporter(indent=None, config=RunConfig())
        assert "\n" not in reporter.generate("orbits", {"mu": Partition((2,))})


class TestCSV:
    """Tests for CSV output."""

    def test_header_and_rows(self):
        """Test sorted columns and exact cells."""
        text = emit_csv([{"b": Fraction(1, 2), "a": 1}, {"a": 2, "b": 0}])
        rows = list(csv.reader(StringIO(text)))
        assert rows[0] == ["a", "b"]
        assert rows[1] == ["1", "1/2"]
        assert rows[2] == ["2", "0"]

    def test_rows_key(self):
        """Test that a dict payload contributes its rows list."""
        text = emit_csv({"n": 2, "rows": [{"x": [1, 2]}]})
        rows = list(csv.reader(StringIO(text)))
        assert rows == [["x"], ["[1,2]"]]

    def test_single_record(self):
        """Test that a plain dict becomes one row."""
        rows = list(csv.reader(StringIO(emit_csv({"irr_count": 7, "ok": True}))))
        assert rows == [["irr_count", "ok"], ["7", "true"]]

    def test_preferred_columns(self):
        """Test leading columns chosen by the reporter."""
        text = CSVReporter(columns=["z"]).generate([{"a": 1, "z": 2}])
        assert text.splitlines()[0] == "z,a"
