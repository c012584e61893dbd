"""Exception types shared across the package."""


class TubularError(Exception):
    """Base class for all errors raised by this package."""


class ZeroVector(TubularError, ValueError):
    pass


class InvalidGroup(TubularError, ValueError):
    pass


class ResourceLimit(TubularError):
    """A configured cap (tree size, wall count, search nodes) was exceeded."""


class NotFound(TubularError):
    """Bounded search exhausted without a hit.  Not a proof of nonexistence."""


class SummandConditionFailed(TubularError):
    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class RecursionLimit(TubularError):
    pass


class BadPairing(TubularError, ValueError):
    pass


class OnWall(TubularError, ValueError):
    pass


class InconsistentOrientation(TubularError, ValueError):
    pass


class PartitionViolation(TubularError):
    pass


class DimensionExceeded(TubularError):
    pass


class InputError(TubularError, ValueError):
    """Malformed input document; ``location`` is a JSON path."""

    def __init__(self, message, location="$"):
        super().__init__(f"{location}: {message}")
        self.location = location


class NotEquitable(TubularError, ValueError):
    """The curve sets fail the equitable-set conditions; ``failures`` lists why."""

    def __init__(self, message, failures=()):
        super().__init__(message)
        self.failures = list(failures)
