"""Exception hierarchy shared by every module of the package."""


class BSError(Exception):
    """Base class for all errors raised by bsgroup."""


class UnsupportedModulus(BSError, ValueError):
    """Raised for n in {-1, 0, 1}; those groups are not handled here."""


class NotInRing(BSError, ValueError):
    """A rational value whose denominator has a prime not dividing n."""


class NotAUnit(BSError, ValueError):
    """An automorphism was requested with a non-invertible alpha."""


class ZeroArgument(BSError, ValueError):
    pass


class ContextMismatch(BSError, ValueError):
    """Operands belong to BS(n,1) for different values of n."""


class ExponentOverflow(BSError, OverflowError):
    """An exponent of n (or of t) left the supported range."""


class WitnessSearchCapExceeded(BSError):
    """A certificate search ran out of candidates; the decision is still exact."""


class ParseError(BSError, ValueError):
    """Malformed word, number or automorphism literal.

    ``offset`` is the 0-based position in the input where parsing failed and
    ``expected`` names the token class that would have been accepted there.
    """

    def __init__(self, message: str, offset: int, expected: str, text: str = ""):
        self.offset = offset
        self.expected = expected
        self.text = text
        super().__init__(f"{message} at offset {offset} (expected {expected})")
