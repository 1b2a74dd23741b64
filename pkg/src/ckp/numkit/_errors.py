"""Exception types shared across the numeric and symbolic kernels."""


class CKPError(Exception):
    """Base class for all errors raised by this package."""


class IdenticallyZeroDenominator(CKPError):
    pass


class DegenerateInput(CKPError):
    """A genericity gate failed (coincident roots, vanishing field, ...)."""


class LeadingCoefficientVanishes(CKPError):
    pass


class NotATotalDerivative(CKPError):
    """Carries the nonzero variational-derivative witness in ``args[1]``."""


class TruncationExhausted(CKPError):
    """A requested coefficient lies outside the guaranteed-valid range."""


class NonMonicInput(CKPError):
    pass


class ExtractionInconsistent(CKPError):
    """Velocity extraction from an evolution equation failed to close."""


class UDividesZero(CKPError):
    pass


class LimitSingular(CKPError):
    """A purportedly removable singularity was not removable."""


class Degenerate(DegenerateInput):
    """Sample point rejected; args carry the failed gate and its margin."""


class OnDiscriminant(CKPError):
    pass


class BranchAmbiguity(CKPError):
    pass
