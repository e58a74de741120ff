"""Shared test fixtures for sln-sheaves tests."""

from typing import Generator

import pytest
from click.testing import CliRunner

from src.config import ZetaChoice, get_settings
from src.exactalg.partitions import Partition
from src.exactalg.zeta import Zeta
from src.models import RunConfig
from src.springer.blocks import Block, PairLabel, blocks


def P(*parts: int) -> Partition:
    """Shorthand for a partition in tests."""
    return Partition(tuple(parts))


# =============================================================================
# Settings Fixtures
# =============================================================================


@pytest.fixture(autouse=True)
def restore_settings() -> Generator[None, None, None]:
    """Undo convention flags that the CLI group writes into the global settings."""
    settings = get_settings()
    saved = (
        settings.zeta_principal,
        settings.zeta_other,
        settings.nu_sign,
        settings.group_order_cap,
        settings.partition_size_cap,
    )
    yield
    (
        settings.zeta_principal,
        settings.zeta_other,
        settings.nu_sign,
        settings.group_order_cap,
        settings.partition_size_cap,
    ) = saved


@pytest.fixture
def default_config() -> RunConfig:
    """A run configuration with the documented defaults."""
    return RunConfig(
        zeta_principal=ZetaChoice.ONE,
        zeta_other=ZetaChoice.SYMBOLIC,
        nu_sign=1,
    )


# =============================================================================
# Block Fixtures (SL_2 in characteristic 3)
# =============================================================================


@pytest.fixture
def sl2_blocks() -> list[Block]:
    """The two blocks of SL_2 with p = 3, principal first."""
    return blocks(2, 3)


@pytest.fixture
def principal_block(sl2_blocks: list[Block]) -> Block:
    """The principal block of SL_2, p = 3."""
    return sl2_blocks[0]


@pytest.fixture
def cuspidal_block(sl2_blocks: list[Block]) -> Block:
    """The d = 2 block of SL_2, p = 3."""
    return sl2_blocks[1]


@pytest.fixture
def regular_trivial() -> PairLabel:
    """Regular orbit with trivial local system."""
    return PairLabel(P(2), 0)


@pytest.fixture
def regular_faithful() -> PairLabel:
    """Regular orbit with the faithful character of Z/2."""
    return PairLabel(P(2), 1)


@pytest.fixture
def zero_orbit() -> PairLabel:
    """The zero orbit of SL_2."""
    return PairLabel(P(1, 1), 0)


# =============================================================================
# Zeta Fixtures
# =============================================================================


@pytest.fixture
def zeta_one() -> Zeta:
    """zeta = 1."""
    return Zeta.from_choice(ZetaChoice.ONE)


@pytest.fixture
def zeta_symbolic() -> Zeta:
    """A formal zeta."""
    return Zeta.symbolic()


# =============================================================================
# CLI Fixtures
# =============================================================================


@pytest.fixture
def runner() -> CliRunner:
    """Click test runner."""
    return CliRunner()
