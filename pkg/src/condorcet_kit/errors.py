"""Exception types shared across the package."""


class HypothesisViolation(ValueError):
    """An operation was called outside the hypotheses of the theorem it implements.

    ``condition`` names the violated hypothesis, e.g. ``"p > 1/2"``.
    """

    def __init__(self, condition: str, message: str | None = None):
        self.condition = condition
        super().__init__(message or f"hypothesis violated: requires {condition}")


class EnumerationLimit(ValueError):
    """Brute-force enumeration was requested beyond its resource guard."""
