class GlPolyError(Exception):
    pass


class InvalidShapeError(GlPolyError, ValueError):
    pass


class InvalidPrimeError(GlPolyError, ValueError):
    pass


class WeightMismatchError(GlPolyError, ValueError):
    pass


class OddShiftError(GlPolyError, ValueError):
    pass


class ScaleGuardError(GlPolyError):
    pass


class NegativeCoefficientError(GlPolyError):
    pass


class VerificationError(GlPolyError):
    pass
