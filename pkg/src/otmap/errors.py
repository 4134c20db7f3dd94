"""Exception types shared across the package."""


class OtmapError(Exception):
    pass


class DegeneratePolygon(OtmapError):
    pass


class DegenerateSegment(OtmapError):
    pass


class SupportMismatch(OtmapError):
    pass


class SingularityError(OtmapError):
    """A point (or an orbit point) lies on a region boundary where the
    derivative is undefined.  Carries the offending orbit index when known."""

    def __init__(self, msg, index=None):
        super().__init__(msg)
        self.index = index


class ZeroVector(OtmapError):
    pass


class NotASector(OtmapError):
    pass


class PreconditionViolated(OtmapError):
    pass


class ConstructionError(OtmapError):
    pass


class NoReturnWithinCap(OtmapError):
    pass


class BoundaryHit(OtmapError):
    pass


class OutOfFamilyRange(OtmapError):
    pass


class BudgetExhausted(OtmapError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class CertificateFailure(OtmapError):
    pass
