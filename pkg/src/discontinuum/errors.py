"""Error taxonomy.

Every failure mode is a subclass of DiscontinuumError so callers can catch
the package's own problems without swallowing genuine bugs.
"""

from __future__ import annotations


class DiscontinuumError(Exception):
    """Base class for all package errors."""


class ParameterError(DiscontinuumError):
    """An argument is outside its documented domain."""


class DegeneracyError(DiscontinuumError):
    """Geometry too degenerate to process (zero area, parallel chords, ...)."""


class IntegrityError(DiscontinuumError):
    """A data structure violates its own invariants."""


class GlueError(DiscontinuumError):
    """Two meshes disagree along the seam they were asked to share."""


class ConstructionError(DiscontinuumError):
    """A shrink-and-verify loop exhausted its retries without certifying."""


class StageError(DiscontinuumError):
    """A pipeline stage cannot be completed (budget, feature floor, ...)."""
