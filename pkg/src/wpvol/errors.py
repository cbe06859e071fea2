"""Exception types shared across the package.

Every domain error derives from :class:`WpvolError` and carries the process
exit code the CLI should use when it escapes to the top level.
"""


class WpvolError(ValueError):
    """Base class for all domain errors raised by this package."""

    exit_code = 1


class DimensionTooSmall(WpvolError):
    """Fewer than three weights were supplied."""


class WeightOutOfRange(WpvolError):
    """A weight lies outside the open interval (0, 1)."""


class NonRational(WpvolError):
    """An entry could not be parsed as an exact rational."""


class DimensionMismatch(WpvolError):
    """An operation restricted to a fixed number of points got another."""


class InvalidArgs(WpvolError):
    """Arguments outside an operation's documented range."""


class UnsupportedSize(WpvolError):
    """The requested enumeration exceeds the configured size cap."""

    exit_code = 2


class NotCalabiYau(WpvolError):
    """The weights do not sum to 2 exactly."""


class EmptyQuotient(WpvolError):
    """Some weight dominates the rest; the quotient has no stable points."""


class GeneralTypeUnsupported(WpvolError):
    """Weight sum exceeds 2; the fixed-point sum does not apply there."""


class NotLogFano(WpvolError):
    """Weight sum too large for the log Fano arrangement formulas."""


class UnsupportedPolarization(WpvolError):
    """The requested polarization is not available for this operation."""


class ChamberMismatch(WpvolError):
    """The weights do not satisfy the required chamber inequalities."""
