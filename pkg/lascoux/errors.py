"""
Exception hierarchy

Every failure raised by the library is a LascouxError carrying a message,
a machine-readable code and a details mapping. The CLI maps each class to
its exit code.
"""

from typing import Any, Dict, Optional


class LascouxError(Exception):
    """Base exception for the library."""

    default_code: str = "LASCOUX_ERROR"
    exit_code: int = 4

    def __init__(
        self,
        message: str,
        code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        self.message = message
        self.code = code or self.default_code
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert error to dictionary."""
        return {"error": self.message, "code": self.code, "details": self.details}


class DomainError(LascouxError, ValueError):
    """An input violates a type invariant or an operation precondition."""

    default_code = "DOMAIN_ERROR"
    exit_code = 2


class UsageError(LascouxError):
    """Malformed command-line input."""

    default_code = "USAGE_ERROR"
    exit_code = 2


class IdentityCheckError(LascouxError):
    """A computed expansion disagrees with the polynomial it expands."""

    default_code = "IDENTITY_CHECK_FAILED"
    exit_code = 3


class BasisExpansionError(LascouxError):
    """A polynomial could not be written in the Lascoux basis."""

    default_code = "BASIS_EXPANSION_FAILED"
    exit_code = 3


class NotInSpanError(BasisExpansionError):
    """The linear system is inconsistent or has non-integral solutions."""

    default_code = "NOT_IN_SPAN"


class NegativeCoefficientError(BasisExpansionError):
    """The expansion exists but has a negative coefficient."""

    default_code = "NEGATIVE_COEFFICIENT"


class NoPreimageError(LascouxError):
    """Forward insertion found no tableau reverse-inserting to the input."""

    default_code = "NO_PREIMAGE"
    exit_code = 4


class NonUniquePreimageError(LascouxError):
    """Forward insertion found more than one preimage."""

    default_code = "NON_UNIQUE_PREIMAGE"
    exit_code = 4


class InternalAssertionError(LascouxError):
    """An internal invariant failed; indicates a bug, not bad input."""

    default_code = "INTERNAL_ASSERTION"
    exit_code = 4
