"""Exception types shared across sln-sheaves."""

from typing import Any, Optional


class SheavesError(Exception):
    """Base class for all library errors."""

    pass


class LabelError(SheavesError, ValueError):
    """Raised for malformed labels, size mismatches or labels outside a block."""

    pass


class DivisibilityError(LabelError):
    """Raised when a divisibility precondition (t | parts, gcd(t, p) = 1, ...) fails."""

    pass


class CapExceededError(SheavesError):
    """Raised when a desk-scale enumeration cap would be exceeded."""

    def __init__(self, what: str, cap: int, requested: int):
        self.what = what
        self.cap = cap
        self.requested = requested
        super().__init__(f"{what}: requested {requested} exceeds cap {cap}")


class UniquenessError(SheavesError):
    """Raised when a multiplicity-one or uniqueness contract is violated."""

    def __init__(self, message: str, diagnostic: Optional[dict[str, Any]] = None):
        self.diagnostic = diagnostic or {}
        super().__init__(message)


class SearchError(SheavesError):
    """Raised when an explicit search (e.g. for a conjugating element) finds nothing."""

    pass
