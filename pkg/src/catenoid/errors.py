"""Exception hierarchy shared by the numerical modules and the CLI."""


class CatenoidError(Exception):
    """Base class for every error raised by this package."""


class DomainError(CatenoidError, ValueError):
    """An argument lies outside the domain of the operation."""


class InvalidBracketError(DomainError):
    """The end points of a root bracket do not straddle a sign change."""


class NoSolutionError(DomainError):
    """The requested equation has no solution for the given data."""


class ConvergenceError(CatenoidError, ArithmeticError):
    """A numerical procedure failed to reach its tolerance."""


class BudgetExceededError(ConvergenceError):
    """The evaluation budget ran out before the tolerance was met."""


class NonDecayingIntegrandError(ConvergenceError):
    """The tail monitor found the integrand not dominated by the declared majorant."""


class InconclusiveError(ConvergenceError):
    """The answer cannot be resolved at working precision (e.g. a suspected tangency)."""
