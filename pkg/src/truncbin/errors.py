"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class BoundExceededError(RuntimeError):
    """A requested exponent lies beyond the configured scan bound."""


class StackInconsistencyError(RuntimeError):
    """An exact division in the factor stack left a remainder.

    Raised only when an expected-exact stage of the factor construction
    fails; it signals a bug in this package, never bad user input.
    """
