"""Exception types raised across popcert.

Every error derives from :class:`PopcertError`, itself a ``ValueError``, so
callers that only care about "bad input" can catch one thing.
"""


class PopcertError(ValueError):
    pass


class ParseError(PopcertError):
    """Malformed rational, function, spec, instance or sample input."""


class EqualPoints(PopcertError):
    pass


class DuplicateSample(PopcertError):
    """Two samples share an x-value but disagree on f."""


class NonConvexData(PopcertError):
    def __init__(self, index, left_slope, right_slope):
        self.index = index
        self.left_slope = left_slope
        self.right_slope = right_slope
        super().__init__(
            f"samples are not convex at index {index}: "
            f"slope {right_slope} after slope {left_slope}"
        )


class TooFewSamples(PopcertError):
    pass


class LengthMismatch(PopcertError):
    pass


class DimensionMismatch(PopcertError):
    pass


class FloatFunctionNotAllowed(PopcertError):
    pass


class NotZeroSum(PopcertError):
    pass


class IndexOutOfRange(PopcertError):
    pass


class InvalidSpec(PopcertError):
    pass


class InvalidInstance(PopcertError):
    pass


class NotCertified(PopcertError):
    pass
