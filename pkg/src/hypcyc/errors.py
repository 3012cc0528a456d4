"""Exception types raised by the library."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested function."""


class NotRealizableError(DomainError):
    """The side lengths do not bound any cyclic or horocyclic polygon."""


class RadiusDivergesError(DomainError):
    """The tuple is horocyclic (or numerically so): no finite circumradius."""
