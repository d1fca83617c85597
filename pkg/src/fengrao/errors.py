"""Exception hierarchy.

Every error raised for bad input derives from :class:`SemigroupError`, which is
a :class:`ValueError`, so callers that only care about "invalid input" can
catch that one class.
"""

from __future__ import annotations

__all__ = [
    "SemigroupError",
    "NotCoprime",
    "NotClosed",
    "NotMember",
    "InvalidBase",
    "WindowTooSmall",
    "InvalidDescriptor",
    "OutOfFundamentalInterval",
    "NotArf",
    "BelowConductor",
    "NotAdmissibleShape",
    "ConductorLimitExceeded",
]


class SemigroupError(ValueError):
    """Base class for invalid semigroup input."""


class NotCoprime(SemigroupError):
    pass


class NotClosed(SemigroupError):
    pass


class NotMember(SemigroupError):
    pass


class InvalidBase(SemigroupError):
    pass


class WindowTooSmall(SemigroupError):
    pass


class InvalidDescriptor(SemigroupError):
    pass


class OutOfFundamentalInterval(SemigroupError):
    pass


class NotArf(SemigroupError):
    pass


class BelowConductor(SemigroupError):
    pass


class NotAdmissibleShape(SemigroupError):
    pass


class ConductorLimitExceeded(SemigroupError):
    """A construction would exceed the configured conductor limit."""

    def __init__(self, conductor: int, limit: int, lower_bound: bool = False):
        rel = ">=" if lower_bound else "="
        super().__init__(f"conductor {rel} {conductor} exceeds limit {limit}")
        self.conductor = conductor
        self.limit = limit
