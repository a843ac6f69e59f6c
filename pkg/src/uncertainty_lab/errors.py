"""Exception and warning types shared across the package."""


class UncertaintyLabError(Exception):
    """Base class for all library errors."""


class InvalidParameter(UncertaintyLabError, ValueError):
    """A numeric argument violates its precondition (wrong sign, range, ...)."""


class GridMismatch(UncertaintyLabError, ValueError):
    """Two signals (or a signal and an array) live on incompatible grids."""


class DomainError(UncertaintyLabError, ValueError):
    """Operation applied to a signal with the wrong domain tag."""


class ZeroNorm(UncertaintyLabError, ValueError):
    """A functional that normalizes by ||f|| received the zero signal."""


class ConvergenceError(UncertaintyLabError, RuntimeError):
    """An iterative solver failed to reach its tolerance within budget."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class RangeError(UncertaintyLabError, ValueError):
    """Root bracketing / inversion failed on the requested range."""


class NotSupported(UncertaintyLabError, ValueError):
    """Requested combination of model and coordinates is not defined."""


class InvalidInput(UncertaintyLabError, ValueError):
    """Structured input (polyline, table) violates its shape contract."""


class TailWarning(UserWarning):
    """Grid truncation may bias an integral: weight tail bound exceeded."""
