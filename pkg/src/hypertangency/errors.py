"""Exception taxonomy shared across the package.

Every failure mode that callers are expected to react to gets its own type so
the command line layer can map them onto exit codes without string matching.
"""


class HypertangencyError(Exception):
    """Base class for all package errors."""


class InputError(HypertangencyError):
    """Malformed or inconsistent user input (bad config, bad point, ...)."""


class FieldMismatchError(InputError):
    """Two operands live in different, incompatible number fields."""


class BudgetExceededError(HypertangencyError):
    """A degree or field-extension budget was exceeded.

    Raised instead of ever returning an approximate or partial answer.
    """


class PreconditionError(InputError):
    """A documented precondition of an operation does not hold."""


class NotOnCurveError(PreconditionError):
    """The given point does not lie on the curve."""


class NotUnibranchedError(PreconditionError):
    """The curve has more than one branch at the given point."""


class CommonComponentError(PreconditionError):
    """Two curves share a component where they were required not to."""


class DegenerateFrameError(PreconditionError):
    """The requested projective frame does not exist (incidence degenerate)."""


class InternalInvariantError(HypertangencyError):
    """An internal consistency check failed; indicates a bug, not bad input."""
