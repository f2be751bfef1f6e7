"""Exception hierarchy shared by every module of the package."""


class ExtNumError(Exception):
    """Base class for all package errors."""


class DomainError(ExtNumError, ZeroDivisionError):
    """Operation undefined for the given operand (e.g. division by zero)."""


class ResourceError(ExtNumError):
    """An exact computation exceeded the configured size guardrails."""


class NotZeroless(ExtNumError, ArithmeticError):
    """The operand must be zeroless but contains 0."""


class ShapeMismatch(ExtNumError, ValueError):
    pass


class NotSquare(ShapeMismatch):
    pass


class SizeCap(ExtNumError):
    """Matrix order exceeds the cap for factorial-cost algorithms."""


class ConditionUnmet(ExtNumError, ValueError):
    """A precondition of an operation does not hold for the given operands."""


class NotReduced(ExtNumError, ValueError):
    pass


class NotTriangular(ExtNumError, ValueError):
    pass


class BadTolerance(ExtNumError, ValueError):
    """A near-identity tolerance neutrix is not included in the infinitesimals."""


class HypothesisFailed(ExtNumError):
    """Raised on request when the hypotheses of a near-inverse construction fail.

    The report carrying the candidate inverse is attached as ``report``.
    """

    def __init__(self, failed, report=None):
        super().__init__("hypotheses failed: " + ", ".join(failed))
        self.failed = list(failed)
        self.report = report


class UnknownSuite(ExtNumError, KeyError):
    pass


class ParseError(ExtNumError, SyntaxError):
    """Syntax error in the scalar/matrix text format, with a character offset."""

    def __init__(self, message, text="", pos=0):
        super().__init__(f"{message} at position {pos}")
        self.text = text
        self.pos = pos


class TheoremViolation(ExtNumError, AssertionError):
    """A relation guaranteed by a proven inclusion/equality law did not hold.

    Seeing this means either a bug in the arithmetic or a counterexample to
    the law within the computable model.
    """
