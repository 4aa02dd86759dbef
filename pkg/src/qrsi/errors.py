"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class QrsiError(Exception):
    """Base class for all library errors."""


class ValidationError(QrsiError):
    """Invalid input, spec, or configuration."""


class NumericalError(QrsiError):
    """A numerical routine failed or produced non-finite output."""


class NearSingularShiftError(NumericalError):
    """Shifted solve rejected: the shift sits too close to an eigenvalue.

    Carries the offending distance so callers can apply a guard offset.
    """

    def __init__(self, message: str, *, min_distance: float, guard: float):
        super().__init__(message)
        self.min_distance = min_distance
        self.guard = guard


class DegenerateEnsembleError(NumericalError):
    """Every branch of an ensemble lost all overlap with the target eigenspace."""
