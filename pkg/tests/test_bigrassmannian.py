import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.combinatorics.bigrassmannian import (
    adjacent_delta,
    below_set,
    beta,
    beta_inversions,
    beta_positional,
    beta_report,
    beta_sigma,
    beta_squares,
    beta_transposition_delta,
    census,
    max_beta,
)
from app.combinatorics.errors import IndexOutOfRange, InvariantViolation
from app.combinatorics.perm_core import (
    MAX_DEGREE,
    Permutation,
    apply_transposition,
    identity,
    inversions,
    is_bigrassmannian,
    length,
    longest_element,
    make_permutation,
)
from app.combinatorics.triangle import (
    JoinIrreducibleIndex,
    MonotoneTriangle,
    leq,
    make_join_irreducible,
    sigma,
    sigma_identity,
    triangle_of_permutation,
)
from app.config import LIBRARY_CONFIG
from tests.conftest import all_triangles, perm, symmetric_group


@st.composite
def permutations(draw, max_n=10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    return make_permutation(draw(st.permutations(range(1, n + 1))))


class TestBeta:
    def test_worked_example(self, worked_example):
        report = beta_report(worked_example)
        assert report.values() == {
            'positional': 13, 'squares': 13, 'inversions': 13, 'sigma': 13,
        }
        assert report.agree
        assert report.beta == 13
        assert beta(worked_example) == 13

    def test_report_dict(self, worked_example):
        assert beta_report(worked_example).to_dict() == {
            'beta': 13,
            'beta_positional': 13,
            'beta_squares': 13,
            'beta_inversions': 13,
            'beta_sigma': 13,
            'agree': True,
        }

    @pytest.mark.parametrize('text, expected', [
        ('1', 0), ('12', 0), ('21', 1), ('213', 1), ('132', 1),
        ('321', 4), ('24513', 11), ('4321', 10), ('45123', 15),
    ])
    def test_known_values(self, text, expected):
        assert beta(perm(text)) == expected

    @pytest.mark.parametrize('n', range(1, 8))
    def test_longest_element_attains_maximum(self, n):
        assert beta(longest_element(n)) == max_beta(n)
        assert beta(identity(n)) == 0

    def test_odd_square_sum(self):
        # not a permutation, so the parity guarantee does not apply
        with pytest.raises(InvariantViolation):
            beta_squares(Permutation((2, 2)))

    def test_sigma_on_non_permutation_triangle(self):
        t = MonotoneTriangle.from_rows(3, [(2,), (1, 3)])
        assert beta_sigma(t) == 2
        assert beta(t) == 2
        assert len(below_set(t)) == 2

    @pytest.mark.parametrize('n', range(1, 7))
    def test_methods_agree_exhaustively(self, n):
        for x in symmetric_group(n):
            report = beta_report(x)
            assert report.agree, x
            assert 0 <= report.beta <= max_beta(n)

    @given(permutations())
    def test_methods_agree(self, x):
        assert beta_report(x).agree

    @given(permutations())
    def test_inversion_summands_are_positive(self, x):
        summands = [x(i) - x(j) for i, j in inversions(x).pairs]
        assert all(s >= 1 for s in summands)
        assert beta_inversions(x) >= length(x)

    def test_beta_equals_length_only_for_unit_gaps(self):
        for x in symmetric_group(5):
            unit = all(x(i) - x(j) == 1 for i, j in inversions(x).pairs)
            assert (beta(x) == length(x)) == unit

    def test_equal_length_different_beta(self):
        assert length(perm('3412')) == length(perm('4132')) == 4
        assert beta(perm('3412')) == 8
        assert beta(perm('4132')) == 7

    @pytest.mark.parametrize('n', range(1, 7))
    def test_sigma_matches_triangle_sum(self, n):
        for x in symmetric_group(n):
            t = triangle_of_permutation(x)
            assert beta_sigma(x) == beta_sigma(t) == sigma(t) - sigma_identity(n)

    @pytest.mark.parametrize('n', range(1, 6))
    def test_inversion_formula_matches_inversion_set(self, n):
        for x in symmetric_group(n):
            assert beta_inversions(x) == sum(x(i) - x(j) for i, j in inversions(x).pairs)

    def test_longest_element_at_degree_cap(self):
        report = beta_report(longest_element(MAX_DEGREE))
        assert report.agree
        assert report.beta == max_beta(MAX_DEGREE)

    def test_large_random_permutation(self):
        rng = np.random.default_rng(2024)
        x = make_permutation((rng.permutation(3000) + 1).tolist())
        assert beta_report(x).agree


class TestBelowSet:
    def test_worked_example(self, worked_example):
        result = below_set(worked_example)
        assert len(result) == 13
        assert len(result.elements) == 13
        assert perm('41235') in result
        assert perm('45123') in result
        assert perm('51234') not in result
        assert all(is_bigrassmannian(w) for w in result.elements)

    def test_smallest_cases(self):
        assert len(below_set(identity(1))) == 0
        assert len(below_set(identity(4))) == 0
        result = below_set(perm('21'))
        assert result.indices == [JoinIrreducibleIndex(1, 1, 2, 2)]
        assert result.elements == {perm('21')}

    def test_entries_in_index_order(self, worked_example):
        indices = below_set(worked_example).indices
        assert indices == sorted(indices)

    @pytest.mark.parametrize('n', range(1, 6))
    def test_members_lie_below(self, n):
        for x in symmetric_group(n):
            t = triangle_of_permutation(x)
            result = below_set(x)
            assert len(result) == beta(x)
            for idx, w in result.entries:
                assert leq(make_join_irreducible(idx), t)
                assert triangle_of_permutation(w) == make_join_irreducible(idx)

    @pytest.mark.parametrize('n', range(2, 6))
    def test_counts_join_irreducibles_below_any_triangle(self, n):
        for t in all_triangles(n):
            assert len(below_set(t)) == beta_sigma(t)

    @pytest.mark.parametrize('n', range(1, 6))
    def test_monotone_in_bruhat_order(self, n):
        group = symmetric_group(n)
        triangles = {x: triangle_of_permutation(x) for x in group}
        below = {x: below_set(x).elements for x in group}
        for w in group:
            for y in group:
                if leq(triangles[w], triangles[y]):
                    assert below[w] <= below[y]

    def test_debug_checks(self, monkeypatch, worked_example):
        monkeypatch.setitem(LIBRARY_CONFIG, 'debug_checks', True)
        assert len(below_set(worked_example)) == 13


class TestCensus:
    @pytest.mark.parametrize(
        'n, count', [(1, 0), (2, 1), (3, 4), (4, 10), (5, 20), (6, 35), (7, 56)]
    )
    def test_counts(self, n, count):
        assert max_beta(n) == count
        assert len(census(n)) == count

    @pytest.mark.parametrize('n', range(1, 7))
    def test_census_is_every_bigrassmannian(self, n):
        expected = {x for x in symmetric_group(n) if is_bigrassmannian(x)}
        assert census(n).elements == expected


class TestTranspositionRecurrence:
    def test_worked_example(self, worked_example):
        assert beta_transposition_delta(worked_example, 1, 2) == 2
        assert beta(worked_example) - beta(perm('24513')) == 2

    def test_non_inversion_is_negative(self):
        x = perm('24513')
        assert beta_transposition_delta(x, 1, 2) == -2

    def test_adjacent(self, worked_example):
        assert adjacent_delta(worked_example, 3) == 4
        with pytest.raises(IndexOutOfRange):
            adjacent_delta(worked_example, 5)

    @pytest.mark.parametrize('i, j', [(2, 2), (3, 2), (0, 2), (1, 6)])
    def test_bad_positions(self, worked_example, i, j):
        with pytest.raises(IndexOutOfRange):
            beta_transposition_delta(worked_example, i, j)

    @pytest.mark.parametrize('n', range(2, 6))
    def test_exhaustive(self, n):
        for x in symmetric_group(n):
            for i, j in itertools.combinations(range(1, n + 1), 2):
                reduced = apply_transposition(x, i, j)
                assert beta(x) - beta(reduced) == beta_transposition_delta(x, i, j)

    @given(permutations(max_n=10), st.data())
    def test_recurrence(self, x, data):
        if x.n < 2:
            return
        i = data.draw(st.integers(min_value=1, max_value=x.n - 1))
        j = data.draw(st.integers(min_value=i + 1, max_value=x.n))
        delta = beta_positional(x) - beta_positional(apply_transposition(x, i, j))
        assert delta == beta_transposition_delta(x, i, j)
