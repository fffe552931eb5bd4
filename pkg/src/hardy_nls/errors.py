"""Exception types shared across the package."""

from __future__ import annotations


class ParameterError(ValueError):
    """An argument violates a documented precondition or admissibility bound."""


class DegenerateInputError(ValueError):
    """An operation received an input it cannot act on (e.g. the zero field)."""


class ConvergenceError(RuntimeError):
    """An iterative solver failed to reach its tolerance.

    Carries the last iterate and the residual history so a caller can
    inspect or restart.
    """

    def __init__(self, message, last_iterate=None, residual_history=None):
        super().__init__(message)
        self.last_iterate = last_iterate
        self.residual_history = residual_history


class DegenerateMinimizerError(ConvergenceError):
    """The variational iteration collapsed onto the zero field."""


class BracketError(RuntimeError):
    """A bisection bracket could not be established.

    Carries the amplitudes probed and how each trajectory terminated.
    """

    def __init__(self, message, probes=None):
        super().__init__(message)
        self.probes = probes or []


class StencilError(ValueError):
    """Sampled data does not meet the requirements of a finite-difference stencil."""


class NumericalError(RuntimeError):
    """A numerical operation produced an invalid result (NaN, singular solve, ...)."""


class ConfigError(ValueError):
    """A configuration document failed to parse or validate.

    ``line`` is the 1-based line number when the failure is tied to one.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
