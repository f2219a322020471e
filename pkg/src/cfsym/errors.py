class CFError(ValueError):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class SingularError(CFError):
    """A reciprocal of zero was needed while evaluating a continued fraction."""


class PreconditionError(CFError):
    pass


class NotAdjustableError(PreconditionError):
    pass


class NotPalindromicError(PreconditionError):
    pass


class ZeroTermError(CFError):
    def __init__(self, n):
        super().__init__(f"term {n} of the series is zero")
        self.n = n


class BudgetExceededError(CFError):
    pass


class NormalizationError(CFError):
    """Internal guard: a rewrite changed the value of a continued fraction."""
