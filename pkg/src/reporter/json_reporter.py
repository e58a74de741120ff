"""JSON envelope generator."""

import dataclasses
import json
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from pydantic import BaseModel

from src import __version__
from src.errors import LabelError
from src.exactalg.partitions import Partition
from src.exactalg.symmetric import SnCharLabel
from src.green.polynomials import IntPolynomial
from src.logging_config import get_logger
from src.models import Provenance, RunConfig, TableEnvelope

logger = get_logger("reporter.json_reporter")


class ExactEncoder(json.JSONEncoder):
    """JSON encoder that keeps exact values exact: fractions become 'p/q' strings."""

    def default(self, obj: Any) -> Any:
        if isinstance(obj, Fraction):
            return str(obj)
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, Partition):
            return list(obj.parts)
        if isinstance(obj, SnCharLabel):
            return list(obj.partition.parts)
        if isinstance(obj, IntPolynomial):
            return list(obj.coeffs)
        if isinstance(obj, BaseModel):
            return obj.model_dump(mode="python")
        if isinstance(obj, (set, frozenset)):
            return sorted(obj)
        to_dict = getattr(obj, "to_dict", None)
        if callable(to_dict):
            return to_dict()
        if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
            return {f.name: getattr(obj, f.name) for f in dataclasses.fields(obj)}
        return super().default(obj)


def build_provenance(config: RunConfig) -> Provenance:
    return Provenance(
        sign_default=config.nu_sign,
        zeta_principal=config.zeta_principal.value,
        zeta_other=config.zeta_other.value,
    )


def create_envelope(command: str, payload: Any, config: Optional[RunConfig] = None) -> dict:
    """
    Wrap a table in the self-describing envelope.

    Args:
        command: Subcommand path
        payload: The table (any value ExactEncoder can serialize)
        config: Run configuration to echo (default: from settings)

    Returns:
        Envelope as a plain dictionary
    """
    config = config or RunConfig.from_settings()
    envelope = TableEnvelope(
        command=command,
        config=config.model_dump(mode="json"),
        provenance=build_provenance(config),
        payload=None,
    )
    data = envelope.model_dump(mode="json")
    data["payload"] = payload
    data["report_metadata"] = {"generator": "sln-sheaves", "version": __version__}
    return data


def emit_json(data: Any, indent: Optional[int] = 2) -> str:
    """Serialize deterministically: sorted keys and fixed separators."""
    return json.dumps(
        data,
        cls=ExactEncoder,
        indent=indent,
        sort_keys=True,
        separators=(",", ": ") if indent is not None else (",", ":"),
        ensure_ascii=False,
    )


def parse_envelope(text: str) -> TableEnvelope:
    """Read an emitted envelope back; the payload stays as plain JSON data."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise LabelError(f"not a JSON envelope: {e}") from e
    data.pop("report_metadata", None)
    return TableEnvelope.model_validate(data)


def parse_fraction(value: Union[str, int]) -> Fraction:
    """Inverse of the encoder's 'p/q' rendering."""
    return Fraction(value)


class JSONReporter:
    """Reporter for generating JSON envelopes."""

    def __init__(self, indent: Optional[int] = 2, config: Optional[RunConfig] = None):
        self.indent = indent
        self.config = config

    def generate(self, command: str, payload: Any) -> str:
        return emit_json(create_envelope(command, payload, self.config), self.indent)

    def save(self, command: str, payload: Any, output_path: Union[str, Path]) -> Path:
        """
        Save a JSON envelope to file.

        Args:
            command: Subcommand path
            payload: The table
            output_path: Path to save the file

        Returns:
            Path to saved file
        """
        output_path = Path(output_path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text(self.generate(command, payload) + "\n", encoding="utf-8")
        logger.info(f"JSON envelope saved to: {output_path}")
        return output_path
