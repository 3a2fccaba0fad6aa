"""Exception types shared across the package."""


class QswapError(Exception):
    """Base class for all package-specific errors."""


class NonHermitianError(QswapError):
    """Input matrix is not Hermitian within tolerance."""


class NoConvergenceError(QswapError):
    """Jacobi sweeps exhausted before the off-diagonal norm target."""


class DimensionMismatchError(QswapError):
    """Matrix dimension incompatible with the requested operation."""


class DomainError(QswapError):
    """Scalar function applied outside its domain (e.g. log of ~0)."""


class InvalidGeometryError(QswapError):
    """Device geometry produces a non-positive inter-node distance."""


class InfeasibleAngleError(QswapError):
    """Geometry does not satisfy the case's angle constraint."""


class NoRootError(QswapError):
    """No sign change of the angle equation on the search grid."""


class GridError(QswapError):
    """Time grid is not strictly increasing."""


class PerturbationTooLargeError(QswapError):
    """Cooling drive amplitude outside the perturbative regime."""


class ConfigError(QswapError):
    """Malformed run configuration; carries a line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
