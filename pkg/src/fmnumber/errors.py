"""Exception hierarchy shared by all modules."""


class FMError(Exception):
    """Base class for every error raised by :mod:`fmnumber`."""


class RankMismatch(FMError):
    """Two torsion points of different rank were combined."""


class KindMismatch(FMError):
    """A torsion point does not fit the fiber kind of an action."""


class NotPrimitive(FMError):
    """A local invariant whose order differs from its declared multiplicity."""


class ParseError(FMError):
    """Structurally malformed input (JSON config, point literal, ...)."""


class InvalidConfig(FMError):
    """A surface configuration failed validation."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class Degenerate(FMError):
    """Three points that do not determine a Moebius map."""


class PossiblyInfinite(FMError):
    """Stabilizer requested for too few marked points to be finite."""


class NotSmooth(FMError):
    """Fiber product of two surfaces whose discriminants meet."""


class InsufficientPartners(FMError):
    """Fewer Fourier-Mukai partners than the requested family size."""

    def __init__(self, message, suggested_m=None):
        super().__init__(message)
        self.suggested_m = suggested_m
