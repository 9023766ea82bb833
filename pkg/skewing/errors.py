"""Exception hierarchy shared by every skewing module."""


class SkewingError(ValueError):
    """Base class for all errors raised by the library."""


class AlphabetError(SkewingError):
    """A letter lies outside [N], or two objects disagree on N."""


class ContainmentError(SkewingError):
    """A skew shape lambda/mu was requested with mu not contained in lambda."""


class NotSymmetricError(SkewingError):
    """A quasisymmetric function was expected to be symmetric but is not."""


class WeightMismatchError(SkewingError):
    """Partition weights do not satisfy the required identity."""


class PosetError(SkewingError):
    """Malformed Hessenberg vector or failed unit interval order axiom."""


class PreconditionError(SkewingError):
    """An argument is outside the domain of the operation, e.g. k < 1 or a wrong-length content vector."""


class ParseError(SkewingError):
    """Malformed command-line or JSON input."""
