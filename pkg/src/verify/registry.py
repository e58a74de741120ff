"""Registry of verification suites."""

from typing import Optional

from src.errors import LabelError
from src.logging_config import get_logger, timed
from src.models import RunConfig, SuiteResult
from src.verify.base import VerificationSuite
from src.verify.suites import (
    CensusSuite,
    CuspidalScalarSuite,
    IrrCountSuite,
    KostkaSuite,
    OmegaSuite,
    RegularAgreementSuite,
    RescalingSuite,
    ScalarRecordSuite,
    UnitaritySuite,
    ZLocationSuite,
)

logger = get_logger("verify.registry")

ALL_SUITES = "all"


class SuiteRegistry:
    """Registry for verification suites."""

    def __init__(self):
        self._suites: list[VerificationSuite] = []

    def register(self, suite: VerificationSuite) -> None:
        """Register a suite; a later suite with the same name replaces the earlier one."""
        self.unregister(suite.name)
        self._suites.append(suite)
        logger.debug(f"Registered suite: {suite.name}")

    def unregister(self, suite_name: str) -> bool:
        """Unregister a suite by name."""
        for i, suite in enumerate(self._suites):
            if suite.name == suite_name:
                del self._suites[i]
                logger.debug(f"Unregistered suite: {suite_name}")
                return True
        return False

    def get(self, suite_name: str) -> VerificationSuite:
        """Look a suite up by name or alias."""
        for suite in self._suites:
            if suite.name == suite_name or suite_name in suite.aliases:
                return suite
        raise LabelError(f"unknown suite '{suite_name}'; known: {', '.join(self.names())}")

    def get_suites(self) -> list[VerificationSuite]:
        return self._suites.copy()

    def names(self) -> list[str]:
        return [suite.name for suite in self._suites]

    def clear(self) -> None:
        self._suites.clear()


def create_default_registry() -> SuiteRegistry:
    """Create a registry with one suite per acceptance property."""
    registry = SuiteRegistry()

    # Counting identities
    registry.register(IrrCountSuite())
    registry.register(CensusSuite())

    # Green functions
    registry.register(KostkaSuite())
    registry.register(RescalingSuite())
    registry.register(RegularAgreementSuite())
    registry.register(OmegaSuite())

    # Transforms and scalars
    registry.register(UnitaritySuite())
    registry.register(CuspidalScalarSuite())
    registry.register(ZLocationSuite())
    registry.register(ScalarRecordSuite())

    return registry


def run_suite(
    name: str,
    config: Optional[RunConfig] = None,
    registry: Optional[SuiteRegistry] = None,
) -> list[SuiteResult]:
    """
    Run one suite by name, or every registered suite for 'all'.

    Args:
        name: Suite name or 'all'
        config: Run configuration (default: from settings)
        registry: Registry to use (default: all standard suites)

    Returns:
        One SuiteResult per suite run
    """
    config = config or RunConfig.from_settings()
    registry = registry or create_default_registry()
    suites = registry.get_suites() if name == ALL_SUITES else [registry.get(name)]
    results = []
    for suite in suites:
        logger.info(f"Running suite '{suite.name}'")
        with timed(logger, f"suite {suite.name}"):
            result = suite.run(config)
        if len(result.checks) == 1:
            only = result.checks[0]
            result.expected, result.got, result.detail = only.expected, only.got, only.detail
        level = "passed" if result.passed else f"FAILED ({len(result.failed_checks)} checks)"
        logger.info(f"Suite '{suite.name}': {len(result.checks)} checks, {level}")
        results.append(result)
    return results
