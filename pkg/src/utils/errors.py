"""
Error Types
Domain exceptions raised across the package. All of them are ValueErrors so
callers that only care about "bad input" can keep catching ValueError.
"""

from typing import Any, Optional


class TwistloopError(ValueError):
    """Base class for every domain error raised by the package"""

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness


class DivisionByZero(TwistloopError, ZeroDivisionError):
    """Inverse of a zero scalar, or a singular matrix where an inverse was required"""


class InvalidRoot(TwistloopError):
    """The chosen root of unity is not primitive of the automorphism's order"""


class BadRoot(TwistloopError):
    """A root used for the cyclic twist does not satisfy zeta_tilde**n == zeta"""


class NonexistentLimit(TwistloopError):
    """A contraction limit s -> 0 does not exist for some basis pair"""


class UnknownVariable(TwistloopError):
    """A polynomial variable has no basis element in the algebra used for brackets"""


class EmptyInput(TwistloopError):
    """An operation that needs a nonzero polynomial received zero"""


class BadTruncation(TwistloopError):
    """A cyclic quotient was requested with N not a multiple of m"""


class WindowOverflow(TwistloopError):
    """A computation produced t-exponents outside the window it was asked to stay in"""


class DegenerateForm(TwistloopError):
    """A bilinear form is degenerate or not ad-invariant"""


class ResolutionFailed(TwistloopError):
    """Eigenvector generators could not be re-selected as an independent family"""


class NotAnEigenvector(TwistloopError):
    """A generator was expected to be a theta-eigenvector and is not"""


class CatalogRefusal(TwistloopError):
    """The catalog has no exact generating set for the requested object"""


class InvalidAutomorphism(TwistloopError):
    """A matrix is not a Lie algebra automorphism, or has no finite order below the cap"""


class JobParseError(TwistloopError):
    """Malformed job or algebra document; `location` is the JSON path of the problem"""

    def __init__(self, message: str, location: str = "$"):
        super().__init__(f"{location}: {message}", witness=location)
        self.location = location
