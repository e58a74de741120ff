"""Base interface for verification suites."""

from abc import ABC, abstractmethod
from typing import Any, Optional

from src.models import CheckResult, RunConfig, SuiteResult


class VerificationSuite(ABC):
    """Abstract base class for verification suites."""

    @property
    @abstractmethod
    def name(self) -> str:
        """Name used on the command line."""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        """Description of what this suite checks."""
        pass

    @property
    def slow(self) -> bool:
        """Suites that enumerate groups beyond SL_2 are slow."""
        return False

    @property
    def aliases(self) -> tuple[str, ...]:
        """Other names accepted by --suite."""
        return ()

    @abstractmethod
    def run(self, config: RunConfig) -> SuiteResult:
        """
        Run every check of the suite.

        Args:
            config: Run configuration (caps and conventions)

        Returns:
            SuiteResult with one CheckResult per comparison
        """
        pass

    def new_result(self) -> SuiteResult:
        return SuiteResult(name=self.name, description=self.description)

    @staticmethod
    def compare(
        result: SuiteResult,
        name: str,
        expected: Any,
        got: Any,
        detail: Optional[str] = None,
    ) -> bool:
        """Record an exact equality check on result."""
        passed = bool(expected == got)
        result.add(
            CheckResult(
                name=name,
                passed=passed,
                expected=_plain(expected),
                got=_plain(got),
                detail=detail,
            )
        )
        return passed


def _plain(value: Any) -> Any:
    """Strings for anything that is not already a JSON scalar."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)
