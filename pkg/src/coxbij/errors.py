"""Exception hierarchy shared by every coxbij module."""


class CoxbijError(Exception):
    """Base class for all domain errors raised by coxbij."""


class SystemMismatchError(CoxbijError, ValueError):
    pass


class InvalidRootError(CoxbijError, ValueError):
    pass


class NotAnAntichainError(CoxbijError, ValueError):
    pass


class NotNoncrossingError(CoxbijError, ValueError):
    pass


class InvalidPartitionError(CoxbijError, ValueError):
    pass


class LinkError(CoxbijError, RuntimeError):
    """Raised when the link construction cannot complete.

    ``state`` carries the partial layout so the failing input can be inspected.
    """

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state or {}


class RankBoundError(CoxbijError, ValueError):
    pass
