"""
Monotone triangles of order n
The completion lattice L(S_n): construction from permutations, the componentwise
order realising Bruhat order, join/meet, the Sigma statistic, the minimal
join-irreducible triangles J_abc and exhaustive generation.

A triangle of order n has rows 1..n-1, row a holding a strictly increasing
entries in 1..n. Consecutive rows interlace: x[a][b] >= x[a+1][b] and
x[a][b] <= x[a+1][b+1]. The full row n = (1, ..., n) is implicit and never
stored. Interlacing against it needs no check: if row n-1 omits the value m,
its entries are 1..m-1 followed by m+1..n, so x[n-1][b] is b for b < m and b+1
for b >= m, which always lies between b and b+1.

Entries are stored row-major in one flat tuple; row a starts at offset
a(a-1)/2.
"""

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    DegreeTooLarge,
    InvalidIndex,
    InvalidTriangle,
    InvariantViolation,
    NotAPermutation,
    OrderMismatch,
)
from .perm_core import Permutation, make_permutation

logger = logging.getLogger(__name__)

# 7436 triangles at n = 6; n = 7 is still enumerable, beyond is not practical
TRIANGLE_ENUMERATION_CAP = 7

# The filter strategy walks prod_a C(n, a) candidate arrays
FILTER_ENUMERATION_CAP = 6

Row = Tuple[int, ...]


class Ordering(str, Enum):
    LESS = 'less'
    EQUAL = 'equal'
    GREATER = 'greater'
    INCOMPARABLE = 'incomparable'


def entry_offset(a: int, b: int) -> int:
    """Flat index of entry (a, b), 1 <= b <= a"""
    return a * (a - 1) // 2 + b - 1


def triangle_size(n: int) -> int:
    """Number of stored entries, n(n-1)/2"""
    return n * (n - 1) // 2


@dataclass(frozen=True, order=True)
class MonotoneTriangle:
    """A monotone triangle; entries flattened row by row"""

    n: int
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        validate_entries(self.n, self.entries)

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[Sequence[int]]) -> 'MonotoneTriangle':
        """
        Build a triangle from its rows

        Args:
            n: Order of the triangle
            rows: Rows 1..n-1; row a must have a entries

        Returns:
            The validated triangle
        """
        if len(rows) != max(n - 1, 0):
            raise InvalidTriangle(f"order {n} needs {n - 1} rows, got {len(rows)}")
        for a, row in enumerate(rows, start=1):
            if len(row) != a:
                raise InvalidTriangle(f"row {a} must have {a} entries, got {len(row)}")
        return cls(n, tuple(int(v) for row in rows for v in row))

    def entry(self, a: int, b: int) -> int:
        if not 1 <= b <= a <= self.n - 1:
            raise IndexError(f"no entry ({a}, {b}) in a triangle of order {self.n}")
        return self.entries[entry_offset(a, b)]

    def row(self, a: int) -> Row:
        start = entry_offset(a, 1)
        return self.entries[start:start + a]

    def rows(self) -> List[Row]:
        return [self.row(a) for a in range(1, self.n)]

    def __str__(self) -> str:
        return ' / '.join(' '.join(str(v) for v in row) for row in self.rows())


def validate_entries(n: int, entries: Sequence[int]) -> None:
    """Raise InvalidTriangle unless entries form a monotone triangle of order n"""
    if n < 1:
        raise InvalidTriangle(f"order must be positive, got {n}")
    if len(entries) != triangle_size(n):
        raise InvalidTriangle(
            f"order {n} needs {triangle_size(n)} entries, got {len(entries)}"
        )
    for a in range(1, n):
        base = entry_offset(a, 1)
        for b in range(a):
            v = entries[base + b]
            if not 1 <= v <= n:
                raise InvalidTriangle(f"entry ({a}, {b + 1}) = {v} outside 1..{n}")
            if b > 0 and entries[base + b - 1] >= v:
                raise InvalidTriangle(f"row {a} is not strictly increasing")
            if a < n - 1:
                below = entry_offset(a + 1, 1)
                if not entries[below + b] <= v <= entries[below + b + 1]:
                    raise InvalidTriangle(
                        f"entry ({a}, {b + 1}) = {v} does not interlace row {a + 1}"
                    )


def identity_triangle(n: int) -> MonotoneTriangle:
    """e_ab = b"""
    return MonotoneTriangle(n, tuple(b for a in range(1, n) for b in range(1, a + 1)))


def triangle_of_permutation(x: Permutation) -> MonotoneTriangle:
    """Row a is the sorted prefix {x(1), ..., x(a)}"""
    entries: List[int] = []
    for a in range(1, x.n):
        entries.extend(sorted(x.values[:a]))
    return MonotoneTriangle(x.n, tuple(entries))


def permutation_of_triangle(t: MonotoneTriangle) -> Permutation:
    """
    Recover the permutation whose prefix sets are the rows of t

    Raises:
        NotAPermutation: some row (the implicit row n included) is not its
            predecessor plus exactly one value
    """
    values: List[int] = []
    previous: set = set()
    for a, row in enumerate(t.rows() + [tuple(range(1, t.n + 1))], start=1):
        current = set(row)
        added = current - previous
        if not previous <= current or len(added) != 1:
            raise NotAPermutation(
                f"row {a} of the triangle is not row {a - 1} plus one value"
            )
        values.extend(added)
        previous = current
    return make_permutation(values)


def is_permutation_triangle(t: MonotoneTriangle) -> bool:
    try:
        permutation_of_triangle(t)
    except NotAPermutation:
        return False
    return True


def _check_same_order(s: MonotoneTriangle, t: MonotoneTriangle) -> None:
    if s.n != t.n:
        raise OrderMismatch(f"cannot compare triangles of order {s.n} and {t.n}")


def leq(s: MonotoneTriangle, t: MonotoneTriangle) -> bool:
    """Entrywise s <= t"""
    _check_same_order(s, t)
    return all(u <= v for u, v in zip(s.entries, t.entries))


def compare(s: MonotoneTriangle, t: MonotoneTriangle) -> Ordering:
    _check_same_order(s, t)
    below = leq(s, t)
    above = leq(t, s)
    if below and above:
        return Ordering.EQUAL
    if below:
        return Ordering.LESS
    if above:
        return Ordering.GREATER
    return Ordering.INCOMPARABLE


def join(s: MonotoneTriangle, t: MonotoneTriangle) -> MonotoneTriangle:
    """Least upper bound: entrywise maximum"""
    _check_same_order(s, t)
    return MonotoneTriangle(s.n, tuple(max(u, v) for u, v in zip(s.entries, t.entries)))


def meet(s: MonotoneTriangle, t: MonotoneTriangle) -> MonotoneTriangle:
    """Greatest lower bound: entrywise minimum"""
    _check_same_order(s, t)
    return MonotoneTriangle(s.n, tuple(min(u, v) for u, v in zip(s.entries, t.entries)))


def sigma(t: MonotoneTriangle) -> int:
    """Sum of all entries"""
    return sum(t.entries)


def sigma_identity(n: int) -> int:
    """Sigma(e) = sum_a a(a+1)/2 = (n-1)n(n+1)/6"""
    return (n - 1) * n * (n + 1) // 6


def difference_triangle(t: MonotoneTriangle) -> List[Row]:
    """Rows of x_ab - b; the entries sum to beta"""
    return [tuple(v - b for b, v in enumerate(row, start=1)) for row in t.rows()]


@dataclass(frozen=True, order=True)
class JoinIrreducibleIndex:
    """The triple (a, b, c) naming J_abc in order n"""

    a: int
    b: int
    c: int
    n: int

    def __post_init__(self) -> None:
        a, b, c, n = self.a, self.b, self.c, self.n
        if not 1 <= b <= a <= n - 1:
            raise InvalidIndex(f"need 1 <= b <= a <= n-1, got (a, b, n) = ({a}, {b}, {n})")
        if not b + 1 <= c <= n - a + b:
            raise InvalidIndex(
                f"need {b + 1} <= c <= {n - a + b} for (a, b) = ({a}, {b}), got c = {c}"
            )

    def __str__(self) -> str:
        return f"(a={self.a},b={self.b},c={self.c})"


def join_irreducible_indices(n: int) -> Iterator[JoinIrreducibleIndex]:
    """Every valid (a, b, c) for order n, lexicographically; sum_a a(n-a) of them"""
    for a in range(1, n):
        for b in range(1, a + 1):
            for c in range(b + 1, n - a + b + 1):
                yield JoinIrreducibleIndex(a, b, c, n)


def join_irreducible_permutation(idx: JoinIrreducibleIndex) -> Permutation:
    """1..b-1, then the block c..c+a-b, then b..c-1, then c+a-b+1..n"""
    a, b, c, n = idx.a, idx.b, idx.c, idx.n
    values = itertools.chain(
        range(1, b),
        range(c, c + a - b + 1),
        range(b, c),
        range(c + a - b + 1, n + 1),
    )
    return make_permutation(values)


def make_join_irreducible(idx: JoinIrreducibleIndex) -> MonotoneTriangle:
    """
    J_abc: the componentwise smallest triangle whose (a, b) entry is >= c

    Columns before b hold 1..b-1 in every row. From column b on, row a holds
    the block c..c+a-b; shorter rows keep a prefix of that block and longer
    rows push it one column right per row until it reaches the right edge.

    Args:
        idx: A valid join-irreducible index

    Returns:
        The triangle J_abc; for every triangle x of the same order,
        J_abc <= x exactly when x_ab >= c
    """
    t = triangle_of_permutation(join_irreducible_permutation(idx))
    if t.entry(idx.a, idx.b) != idx.c:
        raise InvariantViolation(f"J{idx} has ({idx.a}, {idx.b}) entry {t.entry(idx.a, idx.b)}")
    return t


def join_irreducible_chain(n: int, a: int, b: int) -> List[MonotoneTriangle]:
    """J_{a,b,b+1} < J_{a,b,b+2} < ... < J_{a,b,n-a+b}"""
    return [
        make_join_irreducible(JoinIrreducibleIndex(a, b, c, n))
        for c in range(b + 1, n - a + b + 1)
    ]


def join_irreducible_index_of(t: MonotoneTriangle) -> Optional[JoinIrreducibleIndex]:
    """The (a, b, c) with J_abc == t, or None when t is not join-irreducible"""
    for a in range(1, t.n):
        for b in range(1, a + 1):
            c = t.entry(a, b)
            if c > b:
                idx = JoinIrreducibleIndex(a, b, c, t.n)
                if make_join_irreducible(idx) == t:
                    return idx
    return None


def compare_join_irreducibles(i1: JoinIrreducibleIndex, i2: JoinIrreducibleIndex) -> Ordering:
    """
    Order two join-irreducibles; same position (a, b) is decided by c alone

    Raises:
        OrderMismatch: the indices belong to different orders
    """
    if i1.n != i2.n:
        raise OrderMismatch(f"cannot compare indices of order {i1.n} and {i2.n}")
    if (i1.a, i1.b) == (i2.a, i2.b):
        if i1.c < i2.c:
            return Ordering.LESS
        if i1.c > i2.c:
            return Ordering.GREATER
        return Ordering.EQUAL
    return compare(make_join_irreducible(i1), make_join_irreducible(i2))


def _check_enumeration_degree(n: int, cap: int) -> None:
    if n < 1:
        raise InvalidTriangle(f"order must be positive, got {n}")
    if n > cap:
        raise DegreeTooLarge(f"enumerating triangles of order {n} exceeds the cap of {cap}")


def _next_rows(n: int, row: Row) -> Iterator[Row]:
    """Strictly increasing rows of length len(row)+1 interlacing row, in lex order"""
    width = len(row) + 1

    def extend(prefix: Tuple[int, ...]) -> Iterator[Row]:
        b = len(prefix) + 1
        if b > width:
            yield prefix
            return
        low = row[b - 2] if b >= 2 else 1
        if prefix:
            low = max(low, prefix[-1] + 1)
        high = row[b - 1] if b <= len(row) else n
        for v in range(low, high + 1):
            yield from extend(prefix + (v,))

    yield from extend(())


def enumerate_triangles(n: int) -> Iterator[MonotoneTriangle]:
    """
    Every monotone triangle of order n, lexicographic in the flattened entries

    Rows are extended one at a time through the interlacing constraint.

    Raises:
        DegreeTooLarge: n > TRIANGLE_ENUMERATION_CAP
    """
    _check_enumeration_degree(n, TRIANGLE_ENUMERATION_CAP)
    logger.debug(f"Enumerating monotone triangles of order {n} by row extension")

    def walk(rows: Tuple[Row, ...]) -> Iterator[Tuple[Row, ...]]:
        if len(rows) == n - 1:
            yield rows
            return
        candidates = ((v,) for v in range(1, n + 1)) if not rows else _next_rows(n, rows[-1])
        for row in candidates:
            yield from walk(rows + (row,))

    for rows in walk(()):
        yield MonotoneTriangle(n, tuple(v for row in rows for v in row))


def enumerate_triangles_by_filter(n: int) -> Iterator[MonotoneTriangle]:
    """
    Every monotone triangle of order n, found by filtering all arrays of
    strictly increasing rows; same order as enumerate_triangles

    Raises:
        DegreeTooLarge: n > FILTER_ENUMERATION_CAP
    """
    _check_enumeration_degree(n, FILTER_ENUMERATION_CAP)
    logger.debug(f"Enumerating monotone triangles of order {n} by filtering")
    row_choices = [itertools.combinations(range(1, n + 1), a) for a in range(1, n)]
    for rows in itertools.product(*row_choices):
        if all(
            rows[a][b] >= rows[a + 1][b] and rows[a][b] <= rows[a + 1][b + 1]
            for a in range(len(rows) - 1)
            for b in range(a + 1)
        ):
            yield MonotoneTriangle(n, tuple(v for row in rows for v in row))


def stack_triangles(triangles: Iterable[MonotoneTriangle], n: int) -> np.ndarray:
    """Matrix with one flattened triangle per row, shape (count, n(n-1)/2)"""
    rows = [t.entries for t in triangles]
    if not rows:
        return np.zeros((0, triangle_size(n)), dtype=np.int64)
    return np.array(rows, dtype=np.int64).reshape(len(rows), triangle_size(n))
