"""
Error types raised across the package.

Input problems derive from ValueError, broken algorithmic invariants from
RuntimeError, and everything from YinSetError so callers can catch the lot.
"""

from typing import List, Sequence


class YinSetError(Exception):
    """Base class for every error raised by this package"""


class MalformedCurveError(YinSetError, ValueError):
    pass


class DegenerateDirectionError(YinSetError, ValueError):
    pass


class DegenerateSegmentError(YinSetError, ValueError):
    pass


class PreconditionViolationError(YinSetError, ValueError):
    pass


class MalformedIncidenceError(YinSetError, ValueError):
    pass


class NotRealizableError(YinSetError, ValueError):
    pass


class InvalidCutPointError(YinSetError, ValueError):
    pass


class DocumentParseError(YinSetError, ValueError):
    pass


class EpsilonMismatchError(YinSetError, ValueError):
    pass


class SpadjorValidationError(YinSetError, ValueError):
    """A document parsed fine but its curves do not form a realizable spadjor"""

    def __init__(self, message: str, violations: Sequence = ()):
        super().__init__(message)
        self.violations: List = list(violations)


class NonPastableError(YinSetError, RuntimeError):
    pass


class InvariantViolationError(YinSetError, RuntimeError):
    def __init__(self, message: str, violations: Sequence = ()):
        super().__init__(message)
        self.violations: List = list(violations)


class RenderError(YinSetError, RuntimeError):
    pass
