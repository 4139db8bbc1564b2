"""Exception taxonomy shared across the package.

Every failure mode callers are expected to handle gets its own class so the
CLI can map library errors onto exit codes without string matching.
"""


class PiSeriesError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(PiSeriesError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class PoleError(DomainError):
    """A rising factorial or gamma value was requested at a pole."""


class BoundUnavailable(PiSeriesError):
    """No certified tail bound exists for the requested truncation point."""


class BudgetExceeded(PiSeriesError):
    """A computation would exceed its configured term or digit budget."""


class AgreementFailure(PiSeriesError):
    """Two independent computation routes disagree; signals an arithmetic bug."""


class NumericBreakdown(PiSeriesError):
    """A sequence transformation hit a degenerate denominator."""


class InsufficientData(PiSeriesError):
    """Not enough partial sums were supplied to run an extrapolation."""
