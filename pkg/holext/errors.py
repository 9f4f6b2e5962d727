"""Exceptions raised by the lab."""


class HolextError(ValueError):
    """Base class for every error raised by the package."""


class DomainError(HolextError):
    pass


class SingularInputError(HolextError):
    """The point lies on the polar hyperplane <x|a> = 1."""


class NoIntersectionError(HolextError):
    """The complex line misses the closed unit ball."""


class TangencyError(HolextError):
    """The complex line touches the unit sphere in a single point."""


class InvalidSpecError(HolextError):
    pass


class PreconditionError(HolextError):
    pass


class AmplificationError(HolextError):
    """The factor (1-|z|^2)^(-n/2) would swamp the quadrature."""


class DegenerateIntersectionError(HolextError):
    """A semiquadric root sits on a constraint boundary."""


class OffSphereError(HolextError):
    pass


class GridFileError(HolextError):
    pass


class InvalidInputError(HolextError):
    pass
