"""Exception hierarchy shared by every laasim module."""

from __future__ import annotations


class LaasimError(Exception):
    """Root of every error raised by laasim."""


class NetworkValidationError(LaasimError, ValueError):
    """A network document or model violates an invariant."""


class SchemaError(NetworkValidationError):
    """A document field is missing or has the wrong type.

    Args:
        field: Dotted path of the offending field, e.g. ``zones[3].demand``.
        reason: Human readable description of the problem.
    """

    def __init__(self, field: str, reason: str) -> None:
        self.field = field
        self.reason = reason
        super().__init__(f"{field}: {reason}")


class DanglingReferenceError(NetworkValidationError):
    """An element references a zone id that does not exist."""


class DisconnectedNetworkError(NetworkValidationError):
    """The line set does not connect every zone."""


class CapacityShortfallError(NetworkValidationError):
    """Demand exceeds generation capacity plus interconnector imports."""


class ZeroInertiaZoneError(NetworkValidationError):
    """A zone hosts no synchronous inertia."""


class ScenarioError(LaasimError, ValueError):
    """An attack scenario or scenario document is malformed."""


class BracketError(LaasimError, ValueError):
    """The threshold bracket does not straddle the frequency limit."""

    def __init__(self, message: str, lo_nadir: float, hi_nadir: float) -> None:
        self.lo_nadir = lo_nadir
        self.hi_nadir = hi_nadir
        super().__init__(
            f"{message} (nadir at lo: {lo_nadir:.4f} Hz, nadir at hi: {hi_nadir:.4f} Hz)"
        )


class NumericalInstabilityError(LaasimError, ArithmeticError):
    """The integrated state became non-finite."""

    def __init__(self, time: float) -> None:
        self.time = time
        super().__init__(f"Non-finite system state detected at t={time:.4f} s.")
