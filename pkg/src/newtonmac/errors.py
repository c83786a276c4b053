"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class PreconditionError(ValueError):
    """Input violates an operation's documented precondition (CLI exit 1)."""


class ModeError(PreconditionError):
    """Exact and float scalars were mixed in a single computation."""


class InvariantError(AssertionError):
    """An internal consistency check failed (CLI exit 2).

    Raised when two independent evaluation routes disagree or a certified
    property does not hold; never expected on valid input.
    """
