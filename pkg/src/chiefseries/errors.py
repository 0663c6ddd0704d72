"""Exception types shared across the library."""


class AlgebraError(Exception):
    """Base class for all library-specific errors."""


class OrderBoundExceeded(AlgebraError):
    """Raised when a closure computation passes the configured size bound."""


class NotNormal(AlgebraError):
    """Raised when an operation requires a normal subgroup and the check fails."""


class SubgroupMismatch(AlgebraError):
    """Raised when subgroups of different parent groups are mixed."""


class IntervalEmpty(AlgebraError):
    """Raised on interval queries where the lower bound is not below the upper."""


class NotGenerating(AlgebraError):
    """Raised when a stabilizer/connection pair fails to generate the group."""


class BudgetExceeded(AlgebraError):
    """Raised when a bounded search runs out of budget.

    Carries the best result found so far (possibly None).
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class PreconditionFailed(AlgebraError):
    """Raised when an operation's stated precondition does not hold."""


class NoCertificate(AlgebraError):
    """Raised when an exhaustive certificate search fails.

    Carries the scanned interval so the failure is reportable.
    """

    def __init__(self, message, scanned=()):
        super().__init__(message)
        self.scanned = tuple(scanned)


class AssociationNotTransitive(AlgebraError):
    """Raised if association fails to be transitive on non-abelian chief factors."""


class NoMatch(AlgebraError):
    """Raised when a series factor has no associated partner in the other series."""


class MultipleMatch(AlgebraError):
    """Raised when a series factor has several associated partners."""


class CoverCountViolation(AlgebraError):
    """Raised when a block is not covered by exactly one series factor.

    Carries the full list of covering indices.
    """

    def __init__(self, message, indices=()):
        super().__init__(message)
        self.indices = tuple(indices)


class VerificationFailed(AlgebraError):
    """Raised when a certified result fails its independent re-verification."""

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class AnchorsNotAscending(AlgebraError):
    """Raised when a requested anchor sequence is not an ascending chain."""


class GroupFileError(AlgebraError):
    """Raised on malformed group specification files, with a line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
