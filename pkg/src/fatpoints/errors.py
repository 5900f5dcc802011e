"""Exception types shared across the package."""


class FatpointsError(Exception):
    """Base class for every error raised by this package."""


class ZeroPoint(FatpointsError):
    """A homogeneous coordinate vector was identically zero."""


class DuplicatePoint(FatpointsError):
    """Two components of a scheme normalize to the same projective point."""


class NonpositiveMultiplicity(FatpointsError):
    """A component multiplicity was not a positive integer."""


class DimensionMismatch(FatpointsError):
    """A coordinate vector does not have ambient_dim + 1 entries."""


class TargetTooSmall(FatpointsError):
    """The target dimension of an embedding is below the source dimension."""


class ZeroParameter(FatpointsError):
    """A rational normal curve parameter pair was (0, 0)."""


class DuplicateParameter(FatpointsError):
    """Two curve parameter pairs describe the same point of the line."""


class TooFewPoints(FatpointsError):
    """An operation needs at least two points (it references m1 and m2)."""


class DegreeOutOfRange(FatpointsError):
    """A degree argument lies outside the range an operation is defined on."""


class NotOnRationalNormalCurve(FatpointsError):
    """A scheme handed to a curve-specific check has a point off the curve."""


class SchemeFormatError(FatpointsError):
    """A scheme or report document is structurally invalid."""


class ResourceLimit(FatpointsError):
    """A computation would exceed the configured column cap."""


class InternalBoundViolation(FatpointsError):
    """A proven bound failed at runtime; this signals a bug, not bad input."""
