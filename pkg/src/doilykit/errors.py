"""Exception types raised by the verification pipeline."""


class DoilykitError(Exception):
    """Base class for all doilykit errors."""


class ClosureViolation(DoilykitError):
    """An operation table escapes the declared element set."""


class RingTooLarge(DoilykitError):
    """Exhaustive enumeration refused: the ring has more than 16 elements."""


class MethodDisagreement(DoilykitError):
    """Two independent computations of the same object disagree."""


class UnimodularNotFree(DoilykitError):
    """A unimodular vector generated a non-free cyclic submodule."""


class InvalidBijection(DoilykitError):
    """The duad-vector dictionary is not a bijection onto the radical square."""


class TraceShapeViolation(DoilykitError):
    """A submodule trace is not seven points on three concurrent lines."""


class CoreShapeViolation(DoilykitError):
    """The distinguished lines and concurrence points do not form the grid."""


class PartitionViolation(DoilykitError):
    """Pairwise intersection sizes admit no clean partition into triples."""


class UnknownTarget(DoilykitError):
    """Export was asked for an artifact it does not know."""


class UnknownFormat(DoilykitError):
    """Export was asked for a format it does not support for the target."""
