"""Exception types raised by majorizer operations.

Numerical indecision is not an error: it is reported through
:attr:`majorizer.verdicts.Status.INCONCLUSIVE`.
"""


class MajorizerError(ValueError):
    """Base class for every error raised by the package."""


class DomainError(MajorizerError):
    """A value lies outside the domain of an operation (negative, non-finite, zero)."""


class PreconditionError(MajorizerError):
    """An operation was called with inputs violating its stated preconditions."""


class UndefinedGapError(PreconditionError):
    """Both functional values are infinite, so their difference is undefined."""


class InputError(MajorizerError):
    """Text or file input could not be parsed into a vector."""


class ReportError(MajorizerError):
    """A report does not match the published JSON schema."""
