"""Exception types shared across the package."""


class RhoGHNError(Exception):
    """Base class for every error raised by rhoghn."""


class ZeroPolynomial(RhoGHNError, ValueError):
    pass


class NonPositiveLeading(RhoGHNError, ValueError):
    pass


class IndexOutOfRange(RhoGHNError, IndexError):
    pass


class ParseError(RhoGHNError, ValueError):
    """Malformed JSON input or an unparseable literal."""


class UnsupportedType(RhoGHNError, ValueError):
    """A group factor outside gl, sl, so and sp."""


class SingularSystem(RhoGHNError, ArithmeticError):
    pass


class InconsistentSystem(RhoGHNError, ArithmeticError):
    pass


class NotDominant(RhoGHNError, ValueError):
    pass


class DegenerateForm(RhoGHNError, ArithmeticError):
    """The rank weighted pairing on cocharacters is not positive definite."""


class ZeroVector(RhoGHNError, ValueError):
    pass


class InconsistentDegrees(RhoGHNError, ValueError):
    """No rational cocharacter reproduces the summand first Chern numbers."""


class UnderdeterminedPsi(RhoGHNError, ValueError):
    pass


class NotCentral(RhoGHNError, ValueError):
    pass


class SearchSpaceTooLarge(RhoGHNError, ValueError):
    pass


class WrongGroupShape(RhoGHNError, ValueError):
    pass


class SemistableInput(RhoGHNError, ValueError):
    pass


class InternalNonRefinement(RhoGHNError, AssertionError):
    """A refinement step failed to split any block."""
