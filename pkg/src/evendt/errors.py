"""Exception types shared across the package."""


class EvendtError(Exception):
    """Base class for all package-specific errors."""


class InvalidPointError(EvendtError):
    """A coordinate was NaN or infinite where a finite value is required."""


class DegenerateCircleError(EvendtError):
    """Three collinear points define no circle."""


class DuplicatePointError(EvendtError):
    """Two input points coincide exactly."""


class DuplicateEdgeError(EvendtError):
    """An edge between these two vertices already exists."""


class MissingElementError(EvendtError):
    """A vertex/edge/triangle identifier is not present in the mesh."""


class InvalidGeometryError(EvendtError):
    """The mesh would become structurally inconsistent (overlapping edges,
    an edge bounded by more than two faces, ...)."""


class NotThreeColorableError(EvendtError):
    """Color propagation hit a conflict; carries an odd interior vertex as witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidColoringError(EvendtError):
    """A vertex coloring is not proper on the given mesh."""


class PlacementFailureError(EvendtError):
    """No admissible Steiner location was found after all refinement rounds.

    Expected only on degenerate (cocircular) configurations; carries the
    insertion region so the instance can be studied offline.
    """

    def __init__(self, message, region=None):
        super().__init__(message)
        self.region = region


class SteinerCapExceededError(EvendtError):
    """The run would insert more Steiner points than the configured cap allows.

    Carries the partially built mesh and the run statistics so callers can
    persist a reproducible snapshot.
    """

    def __init__(self, message, mesh=None, stats=None):
        super().__init__(message)
        self.mesh = mesh
        self.stats = stats
