"""Configuration management for sln-sheaves."""

from enum import Enum

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load environment variables from .env file
load_dotenv()


class OutputFormat(str, Enum):
    """Supported output formats."""

    JSON = "json"
    CSV = "csv"


class ZetaChoice(str, Enum):
    """Admissible assignments of the fourth root of unity attached to a block."""

    ONE = "1"
    MINUS_ONE = "-1"
    I = "i"  # noqa: E741
    MINUS_I = "-i"
    SYMBOLIC = "symbolic"


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="SLN_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Desk-scale caps
    group_order_cap: int = Field(
        default=1_000_000,
        description="Largest |SL_n(F_q)| the brute-force oracle may enumerate",
    )
    partition_size_cap: int = Field(
        default=30,
        description="Largest n for partition-indexed tables",
    )
    semisimple_n_cap: int = Field(
        default=4,
        description="Largest n for semisimple class enumeration in PGL_n",
    )
    semisimple_q_cap: int = Field(
        default=9,
        description="Largest q for semisimple class enumeration in PGL_n",
    )

    # Conventions
    zeta_principal: ZetaChoice = Field(
        default=ZetaChoice.ONE,
        description="Fourth root of unity attached to the principal block",
    )
    zeta_other: ZetaChoice = Field(
        default=ZetaChoice.SYMBOLIC,
        description="Fourth root of unity attached to non-principal blocks",
    )
    nu_sign: int = Field(
        default=1,
        description="Sign convention of the nu_E scalar record (+1 or -1)",
    )

    # Application Settings
    log_level: str = Field(default="WARNING")
    output_format: OutputFormat = Field(default=OutputFormat.JSON)


# Global settings instance
settings = Settings()


def get_settings() -> Settings:
    """Get the current settings instance."""
    return settings
