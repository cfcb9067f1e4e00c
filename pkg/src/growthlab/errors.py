"""Exception types raised across growthlab."""


class GrowthLabError(Exception):
    """Base class for all library errors."""


class TailTooClose(GrowthLabError):
    """Evaluation point too close to the parametric tail for a certified bound."""


class NoConvergence(GrowthLabError):
    pass


class InsufficientData(GrowthLabError):
    pass


class InvalidDescriptor(GrowthLabError):
    """A family or set descriptor failed validation.

    ``field`` names the offending entry so callers can report it.
    """

    def __init__(self, message, field=None):
        self.field = field
        if field is not None:
            message = f"{field}: {message}"
        super().__init__(message)


class WeightViolation(GrowthLabError):
    """k_n < d*(P_n) for some member of a sequence."""


class InsufficientBoundary(GrowthLabError):
    pass


class ZeroCapacity(GrowthLabError):
    pass


class CircleTouchesSet(GrowthLabError):
    pass


class UnsupportedTopology(GrowthLabError):
    pass


class HypothesisViolated(GrowthLabError):
    pass


class ConstructionFailed(GrowthLabError):
    pass


class ConfigError(GrowthLabError):
    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        if where:
            message = f"{', '.join(where)}: {message}"
        super().__init__(message)
