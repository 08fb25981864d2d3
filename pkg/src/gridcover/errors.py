"""Exception types raised across the package."""


class GridCoverError(Exception):
    """Base class for all package errors."""


class DimensionError(GridCoverError):
    """Grid dimensions or cell size are degenerate."""


class BoundsError(GridCoverError):
    """A cell index falls outside the grid."""


class ConflictError(GridCoverError):
    """Two assignments target the same cell."""


class MaskShapeError(GridCoverError):
    """Mask text is empty or has ragged rows."""


class MaskAlphabetError(GridCoverError):
    """Mask text contains a character outside {B, G, Y, R}."""


class CovarianceError(GridCoverError):
    """Covariance matrix is not symmetric positive definite."""


class ThresholdError(GridCoverError):
    """Density thresholds are not strictly decreasing positives."""


class DomainError(GridCoverError):
    """A numeric argument is outside its valid domain."""


class TrajectoryError(GridCoverError):
    """A waypoint sequence violates trajectory invariants."""


class LedgerError(GridCoverError):
    """Energy spending exceeds the starting battery."""


class CapacityError(GridCoverError):
    """Instance exceeds the brute-force enumeration caps."""


class ConfigError(GridCoverError):
    """Run configuration is invalid or unreadable."""
