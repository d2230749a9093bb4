"""Exception types raised by the verification engine."""


class VerifierError(Exception):
    pass


class DivisionByZero(VerifierError, ZeroDivisionError):
    pass


class PoleAtSample(VerifierError):
    """A sampled parameter point hits a denominator root."""


class DegenerateBase(VerifierError):
    """A q-Pochhammer base equals a root of unity."""


class NonzeroConstantTerm(VerifierError):
    pass


class RatioOrientationMismatch(VerifierError):
    """A ratio series would multiply a product in the non-convergent order."""


class NotStabilized(VerifierError):
    pass


class NoCanonicalRoot(VerifierError):
    pass


class InconsistentSystem(VerifierError):
    pass


class UnderdeterminedSystem(VerifierError):
    pass


class SectorMismatch(VerifierError):
    pass


class TruncationTooShort(VerifierError):
    pass


class NonStableGrading(VerifierError):
    pass
