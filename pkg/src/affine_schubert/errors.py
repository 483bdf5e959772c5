"""Exception hierarchy.

Everything derives from :class:`AffineError`.  Validation problems are
``ValueError`` subclasses; resource limits are ``RuntimeError`` subclasses
so that callers (and the CLI) can tell them apart.
"""


class AffineError(Exception):
    pass


class ValidationError(AffineError, ValueError):
    pass


class BadArity(ValidationError):
    pass


class DistinctResidueViolation(ValidationError):
    pass


class WindowSumViolation(ValidationError):
    pass


class PeriodMismatch(ValidationError):
    pass


class InvalidArgs(ValidationError):
    pass


class NotComparable(ValidationError):
    pass


class NotAnOccurrence(ValidationError):
    pass


class NotMinimalRep(ValidationError):
    pass


class IdentityInput(ValidationError):
    pass


class NoFactoringSubword(ValidationError):
    pass


class PatternPresent(ValidationError):
    pass


class BadBeta(ValidationError):
    pass


class PreconditionViolated(ValidationError):
    pass


class SpiralInput(ValidationError):
    pass


class CapacityExceeded(AffineError, RuntimeError):
    pass


class WitnessNotFound(AffineError, RuntimeError):
    pass
