"""Exception hierarchy shared by every layer of the package."""


class HomAltError(Exception):
    """Base class for all errors raised by homalt."""


class DimensionMismatch(HomAltError):
    pass


class IndexOutOfRange(HomAltError):
    pass


class SingularMatrix(HomAltError):
    pass


class GradingError(HomAltError):
    """A tensor or map does not respect the Z2 grading it was declared with."""


class PreconditionFailed(HomAltError):
    """A construction was called on data that does not satisfy its hypotheses.

    Subclasses name the specific hypothesis. The offending report, when there
    is one, is kept on ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotAMorphism(PreconditionFailed):
    pass


class NotMultiplicative(PreconditionFailed):
    pass


class NotAnIsometry(PreconditionFailed):
    pass


class NotPseudoEuclidean(PreconditionFailed):
    pass


class NotSymplectic(PreconditionFailed):
    pass


class NotADerivation(PreconditionFailed):
    pass


class NotAntisymmetric(PreconditionFailed):
    pass


class NotRotaBaxter(PreconditionFailed):
    pass


class NotAlternative(PreconditionFailed):
    pass


class WrongWeight(PreconditionFailed):
    pass


class NotPreAlt(HomAltError):
    """The third product of a post-alternative structure is not identically zero."""


# document / shell layer

class InputError(HomAltError):
    """Anything wrong with user-supplied input; the CLI maps it to exit code 2."""


class ParseError(InputError):
    pass


class SchemaError(InputError):
    pass


class RangeError(InputError):
    pass


class RationalError(InputError):
    pass


class UnknownFixture(InputError):
    pass


class UnknownIdentity(InputError):
    pass
