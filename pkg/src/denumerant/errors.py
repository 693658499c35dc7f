"""Exception types shared by the counting, bounds and R_k modules."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class PreconditionError(ValueError):
    """Input valid in general, but below the range where a result is proven."""


class SearchInconclusive(RuntimeError):
    """A bounded search hit its cap before it could decide."""
