"""Exception types raised across the toolkit."""


class EqkitError(Exception):
    """Base class for every error this package raises deliberately."""


class DivisionByZero(EqkitError, ZeroDivisionError):
    """Division by the zero rational function."""


class EvaluationPole(EqkitError):
    """Evaluation of a rational function at a pole (or at q = 0)."""


class InvalidCartanEntry(EqkitError):
    """An off-diagonal Cartan entry outside the admissible range."""


class BadDiagonal(EqkitError):
    """A Cartan matrix with a diagonal entry different from 2."""


class PositiveOffDiagonal(EqkitError):
    """A Cartan matrix with a positive off-diagonal entry."""


class AsymmetricZero(EqkitError):
    """A Cartan matrix whose zero pattern is not symmetric."""


class NotSymmetrizable(EqkitError):
    """No positive symmetrizer exists for the given Cartan matrix."""


class UnassignedSymbol(EqkitError):
    """A substitution map is missing an image for a generator."""


class ArityMismatch(EqkitError):
    """Tensor operands of different arity."""


class FuelExhausted(EqkitError):
    """Rewriting exceeded its step budget (signals a termination bug)."""


class WindowTooSmall(EqkitError):
    """An ideal-membership enumeration exceeded its configured caps."""


class NotGroupLike(EqkitError):
    """A twist reference element failed the group-like test."""


class ExprSyntaxError(EqkitError):
    """Malformed expression text.

    Carries the source position and a description of what was expected.
    """

    def __init__(self, message, position, expected=None):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.expected = expected or ()


class UnknownGenerator(EqkitError):
    """A generator index outside 1..n."""


class FlavorMismatch(EqkitError):
    """A generator letter that does not belong to the requested alphabet."""
