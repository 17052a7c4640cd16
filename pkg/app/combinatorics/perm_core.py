"""
Permutations of {1..n} in one-line notation
Inversions, length, transposition action, descents and the bigrassmannian predicate.

All positions and values are 1-indexed in the public API.
"""

import itertools
import logging
import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Tuple

import numpy as np

from .errors import DegreeTooLarge, IndexOutOfRange, NotABijection, ParseError

logger = logging.getLogger(__name__)

# Formula-based operations stay exact far beyond this; it bounds memory use.
MAX_DEGREE = 10_000

# enumerate_symmetric_group yields n! values
ENUMERATION_CAP = 10

Position = int
InversionPair = Tuple[Position, Position]


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection x on {1..n}; values[a - 1] = x(a)"""

    values: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, a: Position) -> int:
        """x(a) for 1 <= a <= n"""
        if not 1 <= a <= self.n:
            raise IndexOutOfRange(f"position {a} outside 1..{self.n}")
        return self.values[a - 1]

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def one_line(self) -> str:
        """Compact digits for n <= 9, space-separated values otherwise"""
        if self.n <= 9:
            return ''.join(str(v) for v in self.values)
        return ' '.join(str(v) for v in self.values)

    def __str__(self) -> str:
        return self.one_line()


@dataclass(frozen=True)
class InversionSet:
    """The set I(x) of inversion pairs (i, j), i < j, x(i) > x(j)"""

    n: int
    pairs: FrozenSet[InversionPair]

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs

    def sorted_pairs(self) -> List[InversionPair]:
        return sorted(self.pairs)


@dataclass(frozen=True)
class DescentSet:
    """Descent positions i in 1..n-1, identifying s_i with i"""

    n: int
    positions: FrozenSet[Position]

    def __len__(self) -> int:
        return len(self.positions)

    def __contains__(self, i: object) -> bool:
        return i in self.positions


def make_permutation(values: Iterable[int]) -> Permutation:
    """
    Validate a one-line sequence and wrap it as a Permutation

    Args:
        values: x(1), ..., x(n)

    Returns:
        The validated permutation

    Raises:
        NotABijection: values is empty or not a permutation of 1..n
        DegreeTooLarge: n exceeds MAX_DEGREE
    """
    values = tuple(int(v) for v in values)
    n = len(values)
    if n < 1:
        raise NotABijection("a permutation needs at least one value")
    if n > MAX_DEGREE:
        raise DegreeTooLarge(f"degree {n} exceeds the cap of {MAX_DEGREE}")
    if sorted(values) != list(range(1, n + 1)):
        raise NotABijection(f"{list(values)} is not a permutation of 1..{n}")
    return Permutation(values)


def identity(n: int) -> Permutation:
    """The identity e of S_n"""
    if n < 1:
        raise NotABijection(f"degree must be positive, got {n}")
    if n > MAX_DEGREE:
        raise DegreeTooLarge(f"degree {n} exceeds the cap of {MAX_DEGREE}")
    return Permutation(tuple(range(1, n + 1)))


def longest_element(n: int) -> Permutation:
    """n, n-1, ..., 1"""
    return make_permutation(range(n, 0, -1))


def is_identity(x: Permutation) -> bool:
    return all(v == a for a, v in enumerate(x.values, start=1))


def parse_permutation(text: str) -> Permutation:
    """
    Read a permutation from text

    Values separated by commas and/or whitespace are read as-is; a bare run of
    digits is read one digit per value, which is only valid for n <= 9.

    Args:
        text: e.g. "42513", "4 2 5 1 3" or "10,9,8,7,6,5,4,3,2,1"

    Returns:
        The parsed permutation
    """
    stripped = text.strip().strip('[]()')
    if not stripped:
        raise ParseError("empty permutation")
    if re.search(r'[,\s]', stripped):
        tokens = [t for t in re.split(r'[,\s]+', stripped) if t]
    else:
        tokens = list(stripped)
    if not all(re.fullmatch(r'[0-9]+', t) for t in tokens):
        raise ParseError(f"cannot read {text!r} as a permutation")
    return make_permutation(int(t) for t in tokens)


def inverse(x: Permutation) -> Permutation:
    inv = [0] * x.n
    for a, v in enumerate(x.values, start=1):
        inv[v - 1] = a
    return Permutation(tuple(inv))


def inversions(x: Permutation) -> InversionSet:
    """I(x) = {(i, j) : i < j, x(i) > x(j)}"""
    vals = x.values
    pairs = frozenset(
        (i + 1, j + 1)
        for i, j in itertools.combinations(range(x.n), 2)
        if vals[i] > vals[j]
    )
    return InversionSet(x.n, pairs)


def length(x: Permutation) -> int:
    """Number of inversions; one numpy comparison per position, O(n) memory"""
    vals = np.asarray(x.values, dtype=np.int64)
    return int(sum(np.count_nonzero(vals[i + 1:] < vals[i]) for i in range(x.n - 1)))



def check_positions(x: Permutation, i: Position, j: Position) -> None:
    if not 1 <= i < j <= x.n:
        raise IndexOutOfRange(f"need 1 <= i < j <= {x.n}, got (i, j) = ({i}, {j})")


def apply_transposition(x: Permutation, i: Position, j: Position) -> Permutation:
    """
    x * t_ij: swap the values at positions i and j

    Raises:
        IndexOutOfRange: unless 1 <= i < j <= n
    """
    check_positions(x, i, j)
    vals = list(x.values)
    vals[i - 1], vals[j - 1] = vals[j - 1], vals[i - 1]
    return Permutation(tuple(vals))


def reductions(x: Permutation) -> List[Tuple[InversionPair, Permutation]]:
    """One (pair, x * t_ij) entry per inversion, in lexicographic pair order"""
    return [
        (pair, apply_transposition(x, *pair))
        for pair in inversions(x).sorted_pairs()
    ]


def right_descents(x: Permutation) -> DescentSet:
    """D_R(x) = {i : x(i) > x(i+1)}"""
    vals = x.values
    return DescentSet(
        x.n,
        frozenset(i for i in range(1, x.n) if vals[i - 1] > vals[i]),
    )


def left_descents(x: Permutation) -> DescentSet:
    """D_L(x) = {i : x^-1(i) > x^-1(i+1)}"""
    return right_descents(inverse(x))


def is_bigrassmannian(x: Permutation) -> bool:
    """Exactly one left descent and exactly one right descent"""
    return len(right_descents(x)) == 1 and len(left_descents(x)) == 1


def enumerate_symmetric_group(n: int) -> Iterator[Permutation]:
    """
    All n! permutations of S_n in lexicographic order of one-line notation

    Raises:
        DegreeTooLarge: n > ENUMERATION_CAP
    """
    if n < 1:
        raise NotABijection(f"degree must be positive, got {n}")
    if n > ENUMERATION_CAP:
        raise DegreeTooLarge(f"enumerating S_{n} exceeds the cap of n = {ENUMERATION_CAP}")
    logger.debug(f"Enumerating S_{n}")
    # itertools.permutations emits lexicographic order for sorted input
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values)
