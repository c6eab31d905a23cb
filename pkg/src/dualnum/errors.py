"""Exception hierarchy shared by all dualnum modules.

Two roots: :class:`ValidationError` for rejected inputs and
:class:`NumericalError` for failures that occur while computing.  The CLI
maps them to exit codes 1 and 2 respectively.
"""


class ValidationError(ValueError):
    """Input does not satisfy an operation's preconditions."""


class OutOfRangeError(ValidationError):
    """Evaluation point lies outside the supported interval."""


class UnsupportedSizeError(ValidationError):
    """Problem size exceeds what the algorithm can evaluate safely."""


class NumericalError(ArithmeticError):
    """Base class for runtime numerical failures."""


class DomainError(NumericalError):
    """An elemental function was evaluated outside its domain, or an
    operand carried a NaN component."""


class SingularDerivativeError(NumericalError):
    """A derivative needed as a divisor vanished at an iterate."""


class DivergenceError(NumericalError):
    """An iteration produced a non-finite iterate."""

    def __init__(self, message: str, iterations: int = 0):
        super().__init__(message)
        self.iterations = iterations


class NonConvergenceError(NumericalError):
    """Residual tolerance not met within the iteration budget."""

    def __init__(self, message: str, residual: float = float("nan")):
        super().__init__(message)
        self.residual = residual


class NoExtremumError(NumericalError):
    """Derivative root search left the data range repeatedly."""


class BlowUpError(NumericalError):
    """ODE state became non-finite during integration."""

    def __init__(self, message: str, step: int = 0):
        super().__init__(message)
        self.step = step


class SingularMatrixError(NumericalError):
    """Matrix inverse requested for a singular matrix."""
