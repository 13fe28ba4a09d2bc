"""Error types. Every error carries a stable name used by the command line front end."""


class MvkitError(Exception):
    """Base class for domain errors."""

    @property
    def name(self):
        return type(self).__name__


class NotGCM(MvkitError):
    pass


class NotSymmetrizable(MvkitError):
    pass


class BadSymmetrizer(MvkitError):
    pass


class MissingOrientation(MvkitError):
    pass


class BadOrientation(MvkitError):
    pass


class NotFiniteType(MvkitError):
    pass


class IncompatiblePairs(MvkitError):
    pass


class CapExceeded(MvkitError):
    pass


class SizeGuard(MvkitError):
    pass


class OnWall(MvkitError):
    pass


class NonIntegral(MvkitError):
    pass


class NotReduced(MvkitError):
    pass


class NotReducedTarget(NotReduced):
    pass


class NegativeMultiplicity(MvkitError):
    pass


class BadWindow(MvkitError):
    pass


class G2Unsupported(MvkitError):
    pass


class NonnegViolation(MvkitError):
    pass


class PhiNonzero(MvkitError):
    pass


class NonTermination(MvkitError):
    pass


class IntegerOverflow(MvkitError):
    pass


class BadInput(MvkitError):
    pass
