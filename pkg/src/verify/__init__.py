"""Verification suites and their registry."""

from src.verify.base import VerificationSuite
from src.verify.registry import (
    ALL_SUITES,
    SuiteRegistry,
    create_default_registry,
    run_suite,
)
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

__all__ = [
    # Registry
    "VerificationSuite",
    "SuiteRegistry",
    "create_default_registry",
    "run_suite",
    "ALL_SUITES",
    # Suites
    "IrrCountSuite",
    "CensusSuite",
    "KostkaSuite",
    "RescalingSuite",
    "RegularAgreementSuite",
    "OmegaSuite",
    "UnitaritySuite",
    "CuspidalScalarSuite",
    "ZLocationSuite",
    "ScalarRecordSuite",
]
