class InvalidInput(ValueError):
    """Malformed arguments: out-of-domain integers, broken divisibility chains, ..."""


class HypothesisViolation(ValueError):
    """Parameters lie outside the range where a closed form is a theorem.

    ``violations`` lists each failed inequality as a human-readable string,
    e.g. ``"2c2-c1 > 2n-2 violated: 1 <= 2"``.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))
