"""
Brute-force ground truth
Bruhat order by breadth-first search over reduction chains, and beta by
exhaustive filtering of S_n. Used only to validate the closed formulas, so this
module depends on perm_core alone.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Optional, Set, Tuple

from .errors import DegreeTooLarge, OrderMismatch
from .perm_core import (
    Permutation,
    enumerate_symmetric_group,
    is_bigrassmannian,
    length,
)

logger = logging.getLogger(__name__)

# lower ideals hold up to n! members
IDEAL_CAP = 8

# oracle_beta walks all of S_n against one ideal
ORACLE_BETA_CAP = 7

OneLine = Tuple[int, ...]


@dataclass(frozen=True)
class BruhatIdeal:
    """Everything reachable from top by chains of reductions"""

    top: Permutation
    members: FrozenSet[Permutation]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, w: object) -> bool:
        return w in self.members


def _check_degree(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise DegreeTooLarge(f"{what} is capped at n = {cap}, got n = {n}")


def _reduction_closure(top: OneLine, target: Optional[OneLine] = None) -> Set[OneLine]:
    """FIFO closure of top under x -> x t_ij for inversions (i, j); stops early at target"""
    n = len(top)
    visited = {top}
    queue = deque([top])
    while queue:
        current = queue.popleft()
        if current == target:
            break
        for i in range(n - 1):
            for j in range(i + 1, n):
                if current[i] > current[j]:
                    swapped = list(current)
                    swapped[i], swapped[j] = swapped[j], swapped[i]
                    reduced = tuple(swapped)
                    if reduced not in visited:
                        visited.add(reduced)
                        queue.append(reduced)
    return visited


def lower_ideal(y: Permutation) -> BruhatIdeal:
    """
    The Bruhat lower ideal {w : w <= y} by breadth-first closure

    Raises:
        DegreeTooLarge: n > IDEAL_CAP
    """
    _check_degree(y.n, IDEAL_CAP, "lower_ideal")
    members = _reduction_closure(y.values)
    logger.debug(f"Lower ideal of {y} has {len(members)} members")
    return BruhatIdeal(top=y, members=frozenset(Permutation(m) for m in members))


def bruhat_leq_bfs(w: Permutation, y: Permutation) -> bool:
    """
    w <= y in Bruhat order, decided by searching reduction chains down from y

    Raises:
        OrderMismatch: w and y have different degrees
        DegreeTooLarge: n > IDEAL_CAP
    """
    if w.n != y.n:
        raise OrderMismatch(f"cannot compare permutations of degree {w.n} and {y.n}")
    _check_degree(y.n, IDEAL_CAP, "bruhat_leq_bfs")
    if length(w) > length(y):
        return False
    return w.values in _reduction_closure(y.values, target=w.values)


def oracle_below_set(x: Permutation) -> FrozenSet[Permutation]:
    """Bigrassmannian permutations of S_n lying in the lower ideal of x"""
    _check_degree(x.n, ORACLE_BETA_CAP, "oracle_beta")
    ideal = lower_ideal(x)
    return frozenset(
        w for w in enumerate_symmetric_group(x.n)
        if is_bigrassmannian(w) and w in ideal
    )


def oracle_beta(x: Permutation) -> Tuple[int, FrozenSet[Permutation]]:
    """
    beta(x) by exhaustive filtering of S_n

    Returns:
        Tuple of (count, set of bigrassmannian permutations below x)

    Raises:
        DegreeTooLarge: n > ORACLE_BETA_CAP
    """
    found = oracle_below_set(x)
    return len(found), found
