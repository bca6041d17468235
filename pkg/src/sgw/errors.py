"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class UnsupportedError(DomainError):
    """The requested combination of parameters is not implemented."""


class DimensionError(ValueError):
    """Operands disagree on the number of torus variables."""


class InconsistencyError(RuntimeError):
    """Internal cross-check failed; indicates an implementation bug, not a zero."""


class ResampleSignal(Exception):
    """A denominator vanished at the sampled point; caller must redraw."""
