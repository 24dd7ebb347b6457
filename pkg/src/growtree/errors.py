"""Exception hierarchy shared by all growtree modules."""


class GrowTreeError(Exception):
    """Base class for every error raised by this package."""


class InvalidSeedError(GrowTreeError, ValueError):
    """A seed tree request was too small (n < 2) or otherwise unusable."""


class EdgeListParseError(GrowTreeError, ValueError):
    """Bad edge-list text; carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotATreeError(GrowTreeError, ValueError):
    """Graph failed tree validation (cycle, disconnected, or too small)."""


class DisconnectedError(GrowTreeError, ValueError):
    """Operation requires a connected graph."""


class ParameterError(GrowTreeError, ValueError):
    """Operation order parameter out of range (e.g. m < 1)."""


class SaturationError(ParameterError):
    """m below the maximum degree for a saturation-constrained operation."""


class SizeLimitError(GrowTreeError, ValueError):
    """Explicit construction would exceed the desk-scale vertex cap."""


class FormulaViolationError(GrowTreeError, AssertionError):
    """Closed form and independent oracle disagree (signals a bug)."""


class WalkCapError(GrowTreeError, RuntimeError):
    """A random walk exceeded its max_steps cap before hitting the target."""


class SpectralSizeError(GrowTreeError, ValueError):
    """Dense spectral solve refused; use the exact tree formula instead."""
