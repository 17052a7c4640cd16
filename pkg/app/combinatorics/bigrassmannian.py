"""
Bigrassmannian census
beta(x), the number of bigrassmannian permutations weakly below x in Bruhat
order, computed four independent ways, the explicit set B(x) and the
transposition recurrence for beta.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Tuple, Union

import numpy as np

from app.config import LIBRARY_CONFIG

from .errors import InvariantViolation
from .perm_core import (
    Permutation,
    check_positions,
    is_bigrassmannian,
    longest_element,
)
from .triangle import (
    JoinIrreducibleIndex,
    MonotoneTriangle,
    join_irreducible_permutation,
    make_join_irreducible,
    sigma,
    sigma_identity,
    triangle_of_permutation,
)

logger = logging.getLogger(__name__)

BetaInput = Union[Permutation, MonotoneTriangle]


def max_beta(n: int) -> int:
    """n(n^2-1)/6 = C(n+1, 3), the number of bigrassmannians in S_n"""
    return n * (n * n - 1) // 6


@dataclass(frozen=True)
class BetaReport:
    """beta(x) by every closed method, for cross-checking"""

    n: int
    beta_positional: int
    beta_squares: int
    beta_inversions: int
    beta_sigma: int

    @property
    def agree(self) -> bool:
        return len(set(self.values().values())) == 1

    @property
    def beta(self) -> int:
        return self.beta_positional

    def values(self) -> Dict[str, int]:
        return {
            'positional': self.beta_positional,
            'squares': self.beta_squares,
            'inversions': self.beta_inversions,
            'sigma': self.beta_sigma,
        }

    def to_dict(self) -> Dict[str, object]:
        return {
            'beta': self.beta,
            **{f'beta_{name}': value for name, value in self.values().items()},
            'agree': self.agree,
        }


@dataclass(frozen=True)
class BelowSet:
    """B(x) as (index, permutation) pairs in (a, b, c) order"""

    top: BetaInput
    entries: Tuple[Tuple[JoinIrreducibleIndex, Permutation], ...] = field(default=())

    @property
    def elements(self) -> FrozenSet[Permutation]:
        return frozenset(perm for _, perm in self.entries)

    @property
    def indices(self) -> List[JoinIrreducibleIndex]:
        return [idx for idx, _ in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, w: object) -> bool:
        return w in self.elements


def beta_positional(x: Permutation) -> int:
    """sum_{a=1}^{n-1} (x(a) - a)(n - a)"""
    n = x.n
    return sum((v - a) * (n - a) for a, v in enumerate(x.values[:-1], start=1))


def beta_squares(x: Permutation) -> int:
    """
    Half the sum of squared displacements (x(a) - a)^2

    Raises:
        InvariantViolation: the square sum is odd, which no permutation allows
    """
    total = sum((v - a) ** 2 for a, v in enumerate(x.values, start=1))
    if total % 2:
        raise InvariantViolation(f"odd displacement-square sum {total} for {x}")
    return total // 2


def beta_inversions(x: Permutation) -> int:
    """
    sum of x(i) - x(j) over the inversions (i, j)

    Summed one position at a time with numpy, so I(x) is never materialised.
    """
    vals = np.asarray(x.values, dtype=np.int64)
    total = 0
    for i in range(x.n - 1):
        gaps = vals[i] - vals[i + 1:]
        total += int(gaps[gaps > 0].sum())
    return total


def beta_sigma(x: BetaInput) -> int:
    """
    Sigma(x) - Sigma(e)

    Also defined on every triangle of the completion, where it counts the
    join-irreducible triangles weakly below x. For a permutation, row a of
    its triangle sums to x(1) + ... + x(a), so Sigma comes from prefix sums
    without building the triangle.
    """
    if isinstance(x, MonotoneTriangle):
        return sigma(x) - sigma_identity(x.n)
    prefix_sums = np.cumsum(np.asarray(x.values[:-1], dtype=np.int64))
    return int(prefix_sums.sum()) - sigma_identity(x.n)


def beta(x: BetaInput) -> int:
    """Canonical beta: positional formula for permutations, Sigma for triangles"""
    if isinstance(x, MonotoneTriangle):
        return beta_sigma(x)
    return beta_positional(x)


def beta_report(x: Permutation) -> BetaReport:
    report = BetaReport(
        n=x.n,
        beta_positional=beta_positional(x),
        beta_squares=beta_squares(x),
        beta_inversions=beta_inversions(x),
        beta_sigma=beta_sigma(x),
    )
    if not report.agree:
        logger.warning(f"beta methods disagree for {x}: {report.values()}")
    return report


def below_set(x: BetaInput) -> BelowSet:
    """
    B(x) = {J_abc : 1 <= b <= a <= n-1, b+1 <= c <= x_ab}

    Args:
        x: A permutation or any triangle of the completion

    Returns:
        The bigrassmannian permutations weakly below x with their indices
    """
    t = x if isinstance(x, MonotoneTriangle) else triangle_of_permutation(x)
    entries = []
    for a in range(1, t.n):
        for b in range(1, a + 1):
            for c in range(b + 1, t.entry(a, b) + 1):
                idx = JoinIrreducibleIndex(a, b, c, t.n)
                entries.append((idx, join_irreducible_permutation(idx)))
    result = BelowSet(top=x, entries=tuple(entries))
    if LIBRARY_CONFIG['debug_checks']:
        _check_below_set(t, result)
    return result


def _check_below_set(t: MonotoneTriangle, result: BelowSet) -> None:
    expected = sum(v - b for row in t.rows() for b, v in enumerate(row, start=1))
    if len(result.elements) != expected:
        raise InvariantViolation(
            f"below_set has {len(result.elements)} distinct elements, expected {expected}"
        )
    for idx, perm in result.entries:
        if not is_bigrassmannian(perm):
            raise InvariantViolation(f"J{idx} = {perm} is not bigrassmannian")
        if triangle_of_permutation(perm) != make_join_irreducible(idx):
            raise InvariantViolation(f"J{idx} does not match its triangle")


def census(n: int) -> BelowSet:
    """Every bigrassmannian permutation of S_n, as B(longest element)"""
    return below_set(longest_element(n))


def beta_transposition_delta(x: Permutation, i: int, j: int) -> int:
    """
    beta(x) - beta(x t_ij) = (j - i)(x(i) - x(j))

    Negative when (i, j) is not an inversion of x.

    Raises:
        IndexOutOfRange: unless 1 <= i < j <= n
    """
    check_positions(x, i, j)
    return (j - i) * (x(i) - x(j))


def adjacent_delta(x: Permutation, i: int) -> int:
    """beta(x) - beta(x s_i) = x(i) - x(i+1)"""
    return beta_transposition_delta(x, i, i + 1)
