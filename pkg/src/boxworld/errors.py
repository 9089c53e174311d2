"""Exception types shared across the package."""


class BoxworldError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(BoxworldError):
    pass


class EmptyPolytope(BoxworldError):
    pass


class Unbounded(BoxworldError):
    pass


class MalformedState(BoxworldError):
    pass


class TheoryMismatch(BoxworldError):
    pass


class SignallingState(BoxworldError):
    pass


class UnsupportedTheory(BoxworldError):
    pass


class NotAdmissible(BoxworldError):
    pass


class NotAnEffect(BoxworldError):
    pass


class NotGLTAdmissible(BoxworldError):
    pass


class InfeasibleMarginal(BoxworldError):
    pass


class InsufficientPairs(BoxworldError):
    pass


class TooLarge(BoxworldError):
    pass
