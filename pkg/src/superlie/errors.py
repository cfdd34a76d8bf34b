"""Exception types raised across the package."""


class SuperLieError(Exception):
    """Base class for every error raised by this package."""


class DuplicateNodes(SuperLieError, ValueError):
    pass


class MixedArity(SuperLieError, ValueError):
    pass


class IndexOutOfRange(SuperLieError, IndexError):
    pass


class ShapeMismatch(SuperLieError, ValueError):
    pass


class DimensionMismatch(SuperLieError, ValueError):
    pass


class BadParameters(SuperLieError, ValueError):
    """Family parameters outside the admissible range."""


class NotAModule(SuperLieError):
    pass


class NotDiagonal(SuperLieError):
    """A basis vector is not a simultaneous eigenvector of the Cartan basis."""


class NotRegularizable(SuperLieError):
    pass


class NotSemisimpleAction(SuperLieError):
    pass


class OddSpacesNotOneDim(SuperLieError):
    pass


class ConstructionFailed(SuperLieError):
    """A generator recipe produced a pair whose closure is not the whole algebra."""


class NotInSpan(SuperLieError):
    """A vector expected to lie in a realized basis span does not."""
