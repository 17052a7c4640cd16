"""
Exception hierarchy for the combinatorics package
"""


class CombinatoricsError(Exception):
    """Base class for every error raised by the combinatorics package"""


class NotABijection(CombinatoricsError, ValueError):
    """Values are not a permutation of 1..n"""


class IndexOutOfRange(CombinatoricsError, ValueError):
    """A position pair (i, j) does not satisfy 1 <= i < j <= n"""


class DegreeTooLarge(CombinatoricsError, ValueError):
    """The requested degree exceeds the documented cap of an operation"""


class NotAPermutation(CombinatoricsError, ValueError):
    """A monotone triangle lies in the completion but is not a permutation"""


class OrderMismatch(CombinatoricsError, ValueError):
    """Two objects of different order were compared or combined"""


class InvalidIndex(CombinatoricsError, ValueError):
    """An (a, b, c) triple violates 1 <= b <= a <= n-1, b+1 <= c <= n-a+b"""


class InvalidTriangle(CombinatoricsError, ValueError):
    """Entries violate the bounds, strict-row or interlacing constraints"""


class ParseError(CombinatoricsError, ValueError):
    """Text could not be read as a permutation"""


class InvariantViolation(CombinatoricsError, AssertionError):
    """An internal invariant failed; indicates a bug or corrupted input"""
