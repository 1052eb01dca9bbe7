"""Exceptions raised by the mirabolic_howe package."""


class MirabolicError(Exception):
    """Root of every domain error raised by this package."""


class NotDivisible(MirabolicError, ArithmeticError):
    """Exact division of Laurent polynomials left a remainder."""


class MalformedDelta(MirabolicError, ValueError):
    """A decoration is not a strictly monotone antichain of positive cells."""


class DimensionMismatch(MirabolicError, ValueError):
    """Two objects from incompatible contexts were combined."""


class ScaleExceeded(MirabolicError, RuntimeError):
    """A finite-field enumeration would exceed the desk-scale bounds or the work budget."""


class NoConsistentConvention(MirabolicError, RuntimeError):
    """No candidate normalization agrees with the finite-field oracle."""


class AmbiguousConvention(MirabolicError, RuntimeError):
    """Several candidate normalizations agree and none of them is the default."""


class SampleDegenerate(MirabolicError, RuntimeError):
    """Algebra dimensions differ between rational specializations."""


class VerificationFailed(MirabolicError, RuntimeError):
    """A verification ran to completion and found a counterexample."""

    def __init__(self, message, payload=None):
        super(VerificationFailed, self).__init__(message)
        self.payload = payload
