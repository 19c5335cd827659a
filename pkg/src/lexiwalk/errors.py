"""Exception hierarchy for lexiwalk.

Every domain error derives from :class:`LexiwalkError` so callers (and the
CLI) can catch model errors without swallowing programming mistakes.
"""

from __future__ import annotations


class LexiwalkError(Exception):
    """Base class for all lexiwalk domain errors."""


# --- zone profiles -----------------------------------------------------------


class EmptyProfileError(LexiwalkError):
    """A zone profile must contain at least one occupancy."""


class NonPositiveOccupancyError(LexiwalkError):
    def __init__(self, zone: int, value: float):
        self.zone = zone
        self.value = value
        super().__init__(f"occupancy of zone {zone} must be positive, got {value!r}")


class OccupancyBelowTwoError(LexiwalkError):
    """Occupancies below 2 would make a stay-probability negative."""

    def __init__(self, zone: int, value: float):
        self.zone = zone
        self.value = value
        super().__init__(
            f"occupancy of zone {zone} is {value!r} < 2; "
            "stay-probability 1 - 2/n would be negative"
        )


class InfeasibleConstraintsError(LexiwalkError):
    """No truncated-geometric profile satisfies the requested totals."""


class NoConvergenceError(LexiwalkError):
    """An iterative solve did not reach its tolerance within the budget."""


# --- chain analytics ---------------------------------------------------------


class RevivalUnsupportedError(LexiwalkError):
    """Analytic operations require an absorbing bottom boundary."""


class SingularSystemError(LexiwalkError):
    """A linear system that must be regular for valid profiles was not."""


class ZeroSurvivalError(LexiwalkError):
    def __init__(self, age: int):
        self.age = age
        super().__init__(
            f"survival to age {age} underflowed below 1e-300; use a smaller age"
        )


class DegenerateLevelError(LexiwalkError):
    """Total transient mass at the requested level underflowed."""


class ConsistencyError(LexiwalkError):
    """An exact internal identity failed; signals a construction bug."""


# --- renewal -----------------------------------------------------------------


class HeavyTailError(LexiwalkError):
    """The lifetime pmf leaves too much mass beyond the horizon."""


class ZeroMeanError(LexiwalkError):
    """Degenerate lifetime input with zero mean."""


# --- monte carlo -------------------------------------------------------------


class SamplingBudgetExhaustedError(LexiwalkError):
    def __init__(self, requested: int, found: int, attempts: int):
        self.requested = requested
        self.found = found
        self.attempts = attempts
        super().__init__(
            f"found {found}/{requested} trajectories in the lifetime window "
            f"after {attempts} attempts"
        )


# --- empirical ---------------------------------------------------------------


class NoDatedRowsError(LexiwalkError):
    """The age table has no row with a known mean age."""


class NonPositiveInputError(LexiwalkError):
    """Calibration inputs must be strictly positive."""


class CalibrationMissingError(LexiwalkError):
    """The comparison needs a tick-to-year calibration."""


# --- configuration -----------------------------------------------------------


class ConfigParseError(LexiwalkError):
    """The configuration file is not valid JSON (carries line/column)."""


class ConfigValidationError(LexiwalkError):
    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"config field {field!r}: {message}")
