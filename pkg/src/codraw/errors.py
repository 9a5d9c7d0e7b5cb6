"""Exception hierarchy for the codraw runtime.

Every error the package raises deliberately derives from CodrawError so
callers (service layer, CLI) can convert them into protocol errors in one
place.
"""

from __future__ import annotations


class CodrawError(Exception):
    """Base class for all codraw errors."""


# -- canvas / geometry -------------------------------------------------------

class EmptyElement(CodrawError):
    """Element has no strokes (or clipping removed all of them)."""


class DuplicateElementId(CodrawError):
    pass


class RejectedByConstraint(CodrawError):
    """Placement validation failed under the reject policy."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"placement rejected: {report.describe()}")


# -- drawing tools -----------------------------------------------------------

class DegenerateSegment(CodrawError):
    pass


class NonPositiveRadius(CodrawError):
    pass


class TooFewPoints(CodrawError):
    pass


class EmptyText(CodrawError):
    pass


class InvalidPolygon(CodrawError):
    pass


class InvalidDensity(CodrawError):
    pass


class SamplingFailed(CodrawError):
    """Rejection sampling hit its attempt cap (degenerate sliver polygon)."""


class InvalidPassCount(CodrawError):
    pass


# -- agent runtime -----------------------------------------------------------

class UnknownTool(CodrawError):
    pass


class ArgSchemaMismatch(CodrawError):
    pass


class ConstraintViolation(CodrawError):
    """A tool call broke a canvas constraint; the canvas was not mutated."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"constraint violation: {report.describe()}")


class MissingMethod(CodrawError):
    """Library mode requires per-entry method text but an entry lacks one."""


class InvalidImage(CodrawError):
    pass


class BackendError(CodrawError):
    """The LLM backend failed (transport, HTTP status, or malformed reply)."""


# -- perception --------------------------------------------------------------

class DegenerateConfiguration(CodrawError):
    """Homography solve from a degenerate (collinear) point configuration."""


class ImageTooSmall(CodrawError):
    pass


# -- session service ---------------------------------------------------------

class UnknownSession(CodrawError):
    pass


class EmptyStrokes(CodrawError):
    pass


class TurnInProgress(CodrawError):
    pass


class BadConfig(CodrawError):
    pass


# -- cli ---------------------------------------------------------------------

class UnknownAssertion(CodrawError):
    pass
