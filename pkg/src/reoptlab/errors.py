"""Exception types shared across solver modules."""


class InvalidHintError(ValueError):
    """The supplied hint violates its stated precondition."""
