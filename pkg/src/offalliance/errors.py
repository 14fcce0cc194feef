"""Exception types raised across the package."""


class GraphFormatError(ValueError):
    """Malformed graph text. ``lineno`` is 1-based, or None for whole-input problems."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class InvalidParameterError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class GuardrailError(RuntimeError):
    pass


class SolverTimeout(TimeoutError):
    pass


class ConvergenceError(RuntimeError):
    def __init__(self, message, residual):
        self.residual = residual
        super().__init__(f"{message} (best residual {residual:.3e})")
