"""Exception types shared across the package."""


class RoipcaError(Exception):
    """Base class for all package errors."""


class InvalidInputError(RoipcaError, ValueError):
    """Input violates a documented precondition (non-finite, wrong shape, ...)."""


class InsufficientDataError(InvalidInputError):
    """Not enough samples to perform the requested operation."""


class ConvergenceError(RoipcaError, RuntimeError):
    """An iterative solver exhausted its iteration budget."""

    def __init__(self, message, bracket=None, iterations=None):
        super().__init__(message)
        self.bracket = bracket
        self.iterations = iterations


class DegenerateGeometryError(RoipcaError, RuntimeError):
    """An eigenvector formula hit a pole separation too small to evaluate."""


class MuNearPoleError(RoipcaError, ValueError):
    """The tail surrogate coincides with a retained eigenvalue; perturb it.

    Callers should nudge the surrogate away from the pole (see
    :func:`roipca.rank_one.nudge_mu`) and retry.
    """


class ConfigError(RoipcaError, ValueError):
    """Invalid configuration (CLI flags, config file, or OnlinePcaConfig)."""


class CsvParseError(RoipcaError, ValueError):
    """Malformed CSV input; carries the 1-based offending line number."""

    def __init__(self, message, line_number):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number
