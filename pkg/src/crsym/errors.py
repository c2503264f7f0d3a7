"""Exception hierarchy shared across the package."""


class CRSymError(Exception):
    """Base class for all package errors."""


class HermitianViolation(CRSymError):
    """A polynomial that must be real-valued is not Hermitian-symmetric."""


class ModelSyntaxError(CRSymError, ValueError):
    """Model text does not match the input grammar."""

    def __init__(self, message, pos, text=""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")


class PluriharmonicTerms(CRSymError):
    """A model still carries pure-z or pure-zbar terms."""


class NotWeightedHomogeneous(CRSymError):
    """No admissible weight makes the model homogeneous of degree one."""


class InfiniteMultitype(CRSymError):
    """The lexicographic infimum of the weights has a zero entry."""


class ZeroField(CRSymError):
    """Operation is undefined on the zero vector field."""


class NotHomogeneous(CRSymError):
    """A vector field mixes several weights."""


class NotRigid(CRSymError):
    """A vector field depends on w."""


class ClosureViolation(CRSymError):
    """A bracket of computed symmetries left the computed span."""


class LengthMismatch(CRSymError):
    """Chain data have inconsistent lengths."""


class NotReal(CRSymError):
    """A constructed model failed the real-valuedness check."""


class NotBalanced(CRSymError):
    """The model admits no balanced weight."""
