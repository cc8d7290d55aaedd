"""Exception hierarchy.  The CLI reports ``type(err).__name__`` on exit 2."""


class LatticeCutError(ValueError):
    """Base class for all domain errors raised by the library."""


class InvalidBody(LatticeCutError):
    pass


class UnboundedEnumeration(LatticeCutError):
    pass


class FNotInterior(LatticeCutError):
    pass


class NotUnimodular(LatticeCutError):
    pass


class InvalidInstance(LatticeCutError):
    pass


class Infeasible(LatticeCutError):
    pass


class Unbounded(LatticeCutError):
    pass


class NotConvexCombination(LatticeCutError):
    pass


class NotViolated(LatticeCutError):
    pass


class ParamOutOfRange(LatticeCutError):
    pass


class FNotInRegion(LatticeCutError):
    pass


class RayConditionFails(LatticeCutError):
    pass


class VerticalRay(LatticeCutError):
    pass


class SlopeNotBetween(LatticeCutError):
    pass
