import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.combinatorics.errors import DegreeTooLarge, IndexOutOfRange, NotABijection, ParseError
from app.combinatorics.perm_core import (
    MAX_DEGREE,
    apply_transposition,
    enumerate_symmetric_group,
    identity,
    inverse,
    inversions,
    is_bigrassmannian,
    is_identity,
    left_descents,
    length,
    longest_element,
    make_permutation,
    parse_permutation,
    reductions,
    right_descents,
)
from tests.conftest import perm, symmetric_group


@st.composite
def permutations(draw, max_n=12):
    n = draw(st.integers(min_value=1, max_value=max_n))
    return make_permutation(draw(st.permutations(range(1, n + 1))))


class TestConstruction:
    def test_worked_example(self, worked_example):
        assert worked_example.n == 5
        assert worked_example.values == (4, 2, 5, 1, 3)
        assert worked_example(1) == 4
        assert worked_example(5) == 3

    def test_smallest_case_is_identity(self):
        x = make_permutation([1])
        assert x == identity(1)
        assert is_identity(x)

    @pytest.mark.parametrize('values', [[2, 2, 3], [], [0, 1], [1, 3], [1, 2, 4]])
    def test_not_a_bijection(self, values):
        with pytest.raises(NotABijection):
            make_permutation(values)

    def test_degree_cap(self):
        with pytest.raises(DegreeTooLarge):
            make_permutation(range(1, MAX_DEGREE + 2))
        assert identity(MAX_DEGREE).n == MAX_DEGREE

    def test_position_out_of_range(self, worked_example):
        with pytest.raises(IndexOutOfRange):
            worked_example(6)

    def test_longest_element(self):
        assert longest_element(4) == perm('4321')


class TestParsing:
    @pytest.mark.parametrize(
        'text', ['42513', '4 2 5 1 3', '4,2,5,1,3', ' 4, 2, 5, 1, 3 ', '[4,2,5,1,3]']
    )
    def test_accepted_forms(self, text, worked_example):
        assert parse_permutation(text) == worked_example

    def test_separators_allow_large_values(self):
        x = parse_permutation('10,9,8,7,6,5,4,3,2,1')
        assert x == longest_element(10)
        assert x.one_line() == '10 9 8 7 6 5 4 3 2 1'

    def test_compact_digits_read_one_value_each(self):
        with pytest.raises(NotABijection):
            parse_permutation('1023456789')

    @pytest.mark.parametrize('text', ['', '   ', '4a213', '4-2', '²', '1²', '1 ²', '١٢'])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_permutation(text)


class TestInversions:
    def test_identity_has_none(self):
        assert len(inversions(identity(6))) == 0
        assert length(identity(6)) == 0

    def test_worked_example(self, worked_example):
        assert inversions(worked_example).pairs == {(1, 2), (1, 4), (1, 5), (2, 4), (3, 4), (3, 5)}
        assert length(worked_example) == 6

    def test_longest_of_s3(self):
        assert inversions(perm('321')).pairs == {(1, 2), (1, 3), (2, 3)}
        assert length(perm('321')) == 3

    @pytest.mark.parametrize('n', range(1, 6))
    def test_length_counts_inversions(self, n):
        for x in symmetric_group(n):
            assert length(x) == len(inversions(x))
            assert (length(x) == 0) == is_identity(x)

    def test_length_at_degree_cap(self):
        assert length(longest_element(MAX_DEGREE)) == MAX_DEGREE * (MAX_DEGREE - 1) // 2


class TestTranspositions:
    def test_swap(self, worked_example):
        assert apply_transposition(worked_example, 1, 2) == perm('24513')
        assert apply_transposition(perm('321'), 1, 3) == perm('123')

    def test_involution(self):
        e = identity(5)
        assert apply_transposition(apply_transposition(e, 2, 4), 2, 4) == e

    @pytest.mark.parametrize('i, j', [(2, 2), (3, 1), (0, 1), (1, 6)])
    def test_bad_positions(self, worked_example, i, j):
        with pytest.raises(IndexOutOfRange):
            apply_transposition(worked_example, i, j)

    def test_reductions_small(self):
        assert reductions(identity(4)) == []
        assert reductions(perm('21')) == [((1, 2), perm('12'))]
        assert reductions(perm('321')) == [
            ((1, 2), perm('231')),
            ((1, 3), perm('123')),
            ((2, 3), perm('312')),
        ]

    @pytest.mark.parametrize('n', range(1, 6))
    def test_reductions_shorten(self, n):
        for x in symmetric_group(n):
            ell = length(x)
            reduced = reductions(x)
            assert len(reduced) == ell
            for (i, j), w in reduced:
                assert length(w) < ell
                if j == i + 1:
                    assert length(w) == ell - 1


class TestDescents:
    def test_identity(self):
        assert len(right_descents(identity(5))) == 0
        assert len(left_descents(identity(5))) == 0

    def test_worked_example(self, worked_example):
        assert right_descents(worked_example).positions == {1, 3}
        assert not is_bigrassmannian(worked_example)

    def test_bigrassmannian_example(self):
        x = perm('45123')
        assert right_descents(x).positions == {2}
        assert left_descents(x).positions == {3}
        assert is_bigrassmannian(x)

    def test_identity_not_bigrassmannian(self):
        assert not is_bigrassmannian(identity(4))

    @pytest.mark.parametrize('n', range(1, 6))
    def test_descent_properties(self, n):
        for x in symmetric_group(n):
            assert left_descents(x) == right_descents(inverse(x))
            empty_right = len(right_descents(x)) == 0
            empty_left = len(left_descents(x)) == 0
            assert empty_right == is_identity(x) == empty_left

    @pytest.mark.parametrize('n', range(1, 8))
    def test_bigrassmannian_count(self, n):
        count = sum(1 for x in symmetric_group(n) if is_bigrassmannian(x))
        assert count == n * (n * n - 1) // 6
        assert count == sum(a * (n - a) for a in range(1, n))


class TestEnumeration:
    def test_s1(self):
        assert list(enumerate_symmetric_group(1)) == [identity(1)]

    def test_s3_order(self):
        group = list(enumerate_symmetric_group(3))
        assert len(group) == 6
        assert group[0] == perm('123')
        assert group[-1] == perm('321')
        assert group == sorted(group)

    def test_s5_size(self):
        group = list(enumerate_symmetric_group(5))
        assert len(group) == 120
        assert len(set(group)) == 120

    def test_cap(self):
        with pytest.raises(DegreeTooLarge):
            next(enumerate_symmetric_group(11))


@given(permutations())
def test_inverse_is_involution(x):
    assert inverse(inverse(x)) == x
    assert length(inverse(x)) == length(x)


@given(permutations())
def test_parse_round_trip(x):
    assert parse_permutation(', '.join(str(v) for v in x)) == x
