"""Exceptions raised by icosaquintic.

Every exception derives from :class:`QuinticError` and from the builtin
exception that best describes it, so callers may catch either.
"""


class QuinticError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(QuinticError, ZeroDivisionError):
    """Exact division by the zero field element."""


class VariableMismatch(QuinticError, ValueError):
    """Polynomials or points with incompatible variable lists."""


class UnknownVariable(QuinticError, ValueError):
    """A variable name that is not in the polynomial's variable list."""


class DegreeTooLow(QuinticError, ValueError):
    """Transvectant order exceeds the degree of an argument."""


class NotDivisible(QuinticError, ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class InternalMismatch(QuinticError, RuntimeError):
    """A transcribed polynomial disagrees with its computed counterpart."""


class NotOnSphere(QuinticError, ValueError):
    """A point passed to stereographic projection is not on the unit sphere."""


class InvalidInput(QuinticError, ValueError):
    """An argument outside the domain of the requested operation."""


class OutOfSeriesDomain(InvalidInput):
    """A series was evaluated outside its safe convergence domain."""


class InvalidC(QuinticError, ValueError):
    """Hypergeometric lower parameter is a non-positive integer."""


class OutsideRadius(InvalidInput):
    """Bring-Jerrard series argument outside the supported disc."""


class TooLarge(QuinticError, ValueError):
    """Exhaustive enumeration requested beyond its size limit."""


class PoleAtSingularPoint(QuinticError, ZeroDivisionError):
    """Evaluation at a singular point of the Schwarzian equation."""


class NoConvergence(QuinticError, ArithmeticError):
    """An iterative method did not reach its tolerance."""


class AmbiguousPreimage(QuinticError, ArithmeticError):
    """Neither preimage of a Tschirnhaus root satisfies the original quintic."""


class DegenerateInput(QuinticError):
    """Input on which the icosahedral method is not defined."""


class RepeatedRoots(DegenerateInput):
    """The quintic has a vanishing discriminant."""


class DegenerateConfiguration(DegenerateInput):
    """A root configuration sits over an icosahedral vertex or edge midpoint."""


class DegenerateImage(DegenerateInput):
    """The Tschirnhaus substitution collapsed distinct roots."""
