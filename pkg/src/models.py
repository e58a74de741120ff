"""Data models for sln-sheaves runs and reports."""

from typing import Any, Optional

from pydantic import BaseModel, Field, model_validator

from src.config import OutputFormat, Settings, ZetaChoice, get_settings
from src.errors import LabelError
from src.exactalg.numbers import check_power_of, characteristic

SCHEMA_VERSION = "1.0"


class RunConfig(BaseModel):
    """Parameters of one CLI invocation, built from Settings plus flags."""

    n: Optional[int] = Field(default=None, description="Rank parameter of SL_n")
    q: Optional[int] = Field(default=None, description="Order of the base field")
    p: Optional[int] = Field(default=None, description="Characteristic, derived from q if omitted")

    # Caps
    group_order_cap: int = Field(default=1_000_000, description="Oracle enumeration cap")
    partition_size_cap: int = Field(default=30, description="Largest partition size")

    # Conventions
    zeta_principal: ZetaChoice = Field(default=ZetaChoice.ONE)
    zeta_other: ZetaChoice = Field(default=ZetaChoice.SYMBOLIC)
    nu_sign: int = Field(default=1, description="Sign convention of nu_E")
    output_format: OutputFormat = Field(default=OutputFormat.JSON)
    deterministic: bool = Field(default=True, description="Always on; echoed for provenance")

    @model_validator(mode="after")
    def _check(self) -> "RunConfig":
        if self.group_order_cap <= 0 or self.partition_size_cap <= 0:
            raise ValueError("caps must be positive")
        if self.nu_sign not in (1, -1):
            raise ValueError(f"nu_sign must be +1 or -1, got {self.nu_sign}")
        if self.q is not None:
            try:
                if self.p is None:
                    self.p = characteristic(self.q)
                else:
                    check_power_of(self.q, self.p)
            except LabelError as e:
                raise ValueError(str(e)) from e
        return self

    @classmethod
    def from_settings(cls, settings: Optional[Settings] = None, **flags: Any) -> "RunConfig":
        settings = settings or get_settings()
        values: dict[str, Any] = {
            "group_order_cap": settings.group_order_cap,
            "partition_size_cap": settings.partition_size_cap,
            "zeta_principal": settings.zeta_principal,
            "zeta_other": settings.zeta_other,
            "nu_sign": settings.nu_sign,
            "output_format": settings.output_format,
        }
        values.update({k: v for k, v in flags.items() if v is not None})
        return cls(**values)


class Provenance(BaseModel):
    """Conventions in force when a table was computed."""

    springer_orientation: str = Field(
        default="trivial character of S_{n/d} <-> regular orbit d*mu",
        description="Orientation of the generalized Springer correspondence",
    )
    extension_model: str = Field(
        default="tensor-induced extension twisted by zeta_k^{s j}",
        description="Preferred extensions of E2 x ... x E2 to the wreath product",
    )
    e_iota_convention: str = Field(
        default="E_iota = E^{la u ... u la}",
        description="Character used by the z_E location test",
    )
    sign_default: int = Field(default=1, description="Sign of nu_E")
    zeta_principal: str = Field(default="1")
    zeta_other: str = Field(default="symbolic")


class TableEnvelope(BaseModel):
    """Self-describing wrapper around every emitted table."""

    command: str = Field(description="Subcommand path, e.g. 'green kostka'")
    config: dict[str, Any] = Field(default_factory=dict, description="Echo of the RunConfig")
    schema_version: str = Field(default=SCHEMA_VERSION)
    provenance: Provenance = Field(default_factory=Provenance)
    payload: Any = Field(default=None, description="The table itself")


class CheckResult(BaseModel):
    """One exact comparison inside a verification suite."""

    name: str = Field(description="What was compared")
    passed: bool = Field(description="Whether expected and got agree")
    expected: Any = Field(default=None)
    got: Any = Field(default=None)
    detail: Optional[str] = Field(default=None)


class SuiteResult(BaseModel):
    """Outcome of one verification suite."""

    name: str
    description: str = ""
    passed: bool = True
    checks: list[CheckResult] = Field(default_factory=list)
    expected: Any = Field(default=None)
    got: Any = Field(default=None)
    detail: Optional[str] = Field(default=None)

    def add(self, check: CheckResult) -> None:
        """Record a check and fold it into the suite verdict."""
        self.checks.append(check)
        self.passed = self.passed and check.passed

    @property
    def failed_checks(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]
