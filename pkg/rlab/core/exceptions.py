"""Custom exceptions for rlab.

Every exception carries the process exit code the command line reports
when it escapes a command: 1 for a failed property, 2 for usage or domain
errors and 3 when precision is exhausted.
"""


class RlabError(Exception):
    """Base exception for all rlab errors."""

    exit_code = 2


class FieldConfigError(RlabError):
    """Raised when a field description file cannot be read or parsed."""

    pass


class FieldDescriptionError(RlabError):
    """Raised when a field description violates one of its invariants."""

    pass


class DomainError(RlabError):
    """Raised when an argument lies outside an operation's domain."""

    pass


class ConvergenceError(DomainError):
    """Raised when a series or Newton iteration has no convergence guarantee."""

    pass


class OutOfModelError(DomainError):
    """Raised for inputs outside the modelled subset (non-decomposable symbols)."""

    pass


class ExpressionSyntaxError(RlabError):
    """Raised when an element expression cannot be parsed."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} at column {column}")
        self.column = column


class UnsupportedParametersError(RlabError):
    """Raised when the norm oracle is asked about parameters it does not cover."""

    pass


class LaurentWindowError(RlabError):
    """Raised when a truncated Laurent product leaves its exponent window."""

    pass


class PrecisionError(RlabError):
    """Raised when a value is indistinguishable from zero at its precision."""

    exit_code = 3


class NonIntegralTraceError(PrecisionError):
    """Raised when a reciprocity trace fails to be divisible by p^n."""

    pass


class GuardRecheckError(PrecisionError):
    """Raised when a recomputation at higher precision disagrees."""

    pass


class OracleError(RlabError):
    """Raised when an oracle invariant (index, independence) is violated."""

    exit_code = 1


class PrecisionWarning(UserWarning):
    """Warning for results computed below the requested precision."""

    pass
