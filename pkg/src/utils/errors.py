"""
Exception hierarchy for the solver and its harness.

Every error raised by the package derives from HocusError so the CLI can map
families of failures onto exit codes (usage vs numerical failure).
"""

from typing import Any, Dict, Optional


class HocusError(Exception):
    """Base class for all solver errors."""
    pass


class ConfigurationError(HocusError):
    """Inconsistent setup: boundary pairing, unknown variant, bad tunables."""
    pass


class InvalidStateError(HocusError):
    """
    Non-physical state (non-positive density or pressure, NaN, negative radicand).

    Attributes:
        location: Context of the failure (axis, cell index, time, ...)
    """

    def __init__(self, message: str, location: Optional[Dict[str, Any]] = None):
        self.location = dict(location or {})
        if self.location:
            context = ", ".join(f"{k}={v}" for k, v in self.location.items())
            message = f"{message} [{context}]"
        super().__init__(message)

    def with_context(self, **context) -> "InvalidStateError":
        """Return a copy of this error with extra location context."""
        merged = {**self.location, **context}
        base = str(self.args[0]).split(" [")[0]
        return InvalidStateError(base, merged)


class SingularSystemError(HocusError):
    """Zero pivot met during a tridiagonal elimination."""
    pass


class UnsupportedCaseError(HocusError):
    """Case exists in the catalog but cannot be instantiated or referenced."""
    pass


class CaseLookupError(HocusError, KeyError):
    """Unknown case name."""

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown case"
