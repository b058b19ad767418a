"""Exception hierarchy shared by every subpackage."""


class MultifilarError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGraph(MultifilarError):
    pass


class NotSimple(InvalidGraph):
    pass


class NotRegular(InvalidGraph):
    def __init__(self, vertex: int, degree: int, expected: int | None = None):
        self.vertex = vertex
        self.degree = degree
        self.expected = expected
        msg = f"vertex {vertex} has degree {degree}"
        if expected is not None:
            msg += f", expected {expected}"
        super().__init__(msg)


class Disconnected(InvalidGraph):
    pass


class OddHandshake(InvalidGraph):
    pass


class InfeasibleParameters(MultifilarError):
    pass


class SizeLimitExceeded(MultifilarError):
    pass


class MalformedGraph6(MultifilarError):
    pass


class UnsupportedLength(MultifilarError):
    pass


class ConvergenceFailure(MultifilarError):
    pass


class NonIntegral(MultifilarError):
    pass


class OverflowGuard(MultifilarError):
    pass


class InversionInconsistency(MultifilarError):
    pass


class DomainError(MultifilarError, ValueError):
    pass


class TailBoundNotMet(MultifilarError):
    pass


class AsymmetricTestFunction(MultifilarError, ValueError):
    pass


class SourceUnavailable(MultifilarError):
    pass


class CacheCorrupt(MultifilarError):
    pass


class IoFailure(MultifilarError):
    pass
