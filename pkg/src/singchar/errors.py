"""Exception and warning types shared across the package."""


class SingcharError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatchError(SingcharError):
    """Two scalars or polynomials belong to different coefficient fields."""


class RingMismatchError(SingcharError):
    """Operands live in different polynomial rings."""


class ParseError(SingcharError):
    """Invalid polynomial expression; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(ParseError):
    """Expression mentions a variable that is not in the ring."""


class ZeroInputError(SingcharError):
    """The zero polynomial is not a valid input for this operation."""


class ZeroIdealError(SingcharError):
    """All generators are zero."""


class NotLocalError(SingcharError):
    """Substitution images must have zero constant term."""


class NotInvertibleError(SingcharError):
    """The linear part of a substitution is singular."""


class NotInMaximalIdealError(SingcharError):
    """Input must have zero constant term."""


class OrderTooSmallError(SingcharError):
    """Determinacy bounds apply only to f with ord(f) >= 2."""


class NotZeroDimensionalError(SingcharError):
    """The staircase complement is infinite."""


class EmptyComplementError(SingcharError):
    """The leading ideal contains 1; there is no highest corner."""


class WrongArityError(SingcharError):
    """Operation is implemented for two variables only."""


class FaceNotOnDiagramError(SingcharError):
    """The face does not support the polynomial from below."""


class NotInnerFaceError(SingcharError):
    """The face lies inside a coordinate hyperplane."""


class NotConvenientError(SingcharError):
    """Volumes need a diagram meeting both coordinate axes."""


class DivergentDiagramError(SingcharError):
    """An extreme vertex sits at lattice distance >= 2 from its axis."""


class NoFacetError(SingcharError):
    """The Newton diagram is a single point."""


class NotQuasihomogeneousError(SingcharError):
    """A form is not quasihomogeneous for the given weights."""


class InternalInconsistencyError(SingcharError):
    """A cross-check that must hold by theory failed; report a bug."""


class CoefficientCollisionWarning(UserWarning):
    """Adding an axis power merged with an existing term of f."""
