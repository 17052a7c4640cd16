from functools import lru_cache
from typing import List

import pytest

from app.combinatorics.perm_core import Permutation, enumerate_symmetric_group, make_permutation
from app.combinatorics.triangle import MonotoneTriangle, enumerate_triangles


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> List[Permutation]:
    return list(enumerate_symmetric_group(n))


@lru_cache(maxsize=None)
def all_triangles(n: int) -> List[MonotoneTriangle]:
    return list(enumerate_triangles(n))


def perm(text: str) -> Permutation:
    """Compact one-line notation, e.g. perm('42513')"""
    return make_permutation(int(ch) for ch in text)


@pytest.fixture
def worked_example() -> Permutation:
    return perm('42513')
