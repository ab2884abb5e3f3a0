"""Exception types shared across the package.

The split between ValidationError and NumericalError mirrors the CLI's exit
codes: bad inputs exit 2, mid-computation failures exit 3.
"""


class CurveSynthError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(CurveSynthError):
    """Inputs rejected before any integration starts."""


class DomainError(ValidationError):
    """A profile was evaluated (or asked to cover) points outside its domain."""


class NegativeCurvature(ValidationError):
    """A profile in the curvature role produced a negative value."""


class NotUnit(ValidationError):
    """A vector or frame required to be orthonormal is not, beyond 1e-9."""


class TooShort(ValidationError):
    """A trace has too few samples for finite differencing."""


class NumericalError(CurveSynthError):
    """Failure arising mid-computation rather than from malformed inputs."""


class ChartSingular(NumericalError):
    """The requested chart is at (or beyond) its coordinate singularity."""


class BothChartsSingular(ChartSingular):
    """Both charts singular at once; impossible for a unit tangent, kept defensive."""


class OutOfValidity(NumericalError):
    """A closed-form expression was evaluated outside its validity window."""


class GridMismatch(NumericalError):
    """Two traces do not share the same arc-length grid."""
