from math import factorial
import pytest
from pydantic import ValidationError
from springerstab.core.exceptions import (
    InvalidPartitionError,
    PreconditionError,
    SizeMismatchError,
    UndefinedOperationError,
)
from springerstab.schemas.partition import Partition
from springerstab.services.partition_core import (
    EMPTY,
    contains,
    dominates,
    hook_lengths,
    lambda_max,
    multinomial,
    n_stat,
    normalize,
    partitions_iter,
    qualifying_partitions,
    remove_box,
    syt_count,
    threshold,
    transpose,
)
from tests.conftest import P


class TestPartitionModel:
    def test_parse_and_text_form(self):
        lam = Partition.parse("4,2,1")
        assert lam.parts == (4, 2, 1)
        assert str(lam) == "4,2,1"
        assert lam.size == 7
        assert lam.length == 3

    def test_empty_partition(self):
        assert Partition.parse("") == EMPTY
        assert EMPTY.size == 0
        assert str(EMPTY) == ""

    def test_part_is_one_based_and_zero_padded(self):
        lam = P(3, 1)
        assert lam.part(1) == 3
        assert lam.part(2) == 1
        assert lam.part(3) == 0

    @pytest.mark.parametrize("text", ["1,2", "3,0", "a,b", "2,-1"])
    def test_rejects_malformed(self, text):
        with pytest.raises(ValidationError):
            Partition.parse(text)

    def test_hashable_and_serializes_to_text(self):
        assert {P(2, 1): 1}[Partition.parse("2,1")] == 1
        assert P(2, 1).model_dump() == "2,1"


def test_normalize_sorts_and_drops_zeros():
    assert normalize([1, 0, 3, 2]) == P(3, 2, 1)
    with pytest.raises(InvalidPartitionError):
        normalize([2, -1])


class TestDominance:
    def test_chain_of_four(self):
        assert dominates(P(4), P(3, 1))
        assert dominates(P(3, 1), P(2, 2))
        assert not dominates(P(2, 2), P(3, 1))

    def test_incomparable_pair(self):
        assert not dominates(P(3, 1, 1, 1), P(2, 2, 2))
        assert not dominates(P(2, 2, 2), P(3, 1, 1, 1))

    def test_reflexive(self):
        for lam in partitions_iter(6):
            assert dominates(lam, lam)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            dominates(P(2), P(1, 1, 1))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_transpose_reverses_order(self, n):
        shapes = list(partitions_iter(n))
        for lam in shapes:
            for mu in shapes:
                if dominates(lam, mu):
                    assert dominates(transpose(mu), transpose(lam))


def test_containment_ignores_size():
    assert contains(P(3, 2, 1), P(2, 2))
    assert contains(P(1), EMPTY)
    assert not contains(P(2, 2), P(1, 1, 1))


@pytest.mark.parametrize("n", range(1, 9))
def test_containment_at_equal_size_is_equality(n):
    shapes = list(partitions_iter(n))
    for lam in shapes:
        for mu in shapes:
            assert contains(lam, mu) == (lam == mu)


def test_transpose_is_involution():
    assert transpose(P(4, 2, 1)) == P(3, 2, 1, 1)
    for lam in partitions_iter(7):
        assert transpose(transpose(lam)) == lam


class TestRemoveBox:
    def test_resorts_rows(self):
        assert remove_box(P(2, 2), 1) == P(2, 1)
        assert remove_box(P(3, 1), 2) == P(3)
        assert remove_box(P(1), 1) == EMPTY

    def test_missing_row(self):
        with pytest.raises(UndefinedOperationError):
            remove_box(P(2, 1), 3)
        with pytest.raises(UndefinedOperationError):
            remove_box(EMPTY, 1)


class TestStatistics:
    @pytest.mark.parametrize("parts, expected", [((4, 2, 1), 4), ((1, 1, 1), 3), ((5,), 0), ((), 0)])
    def test_n_stat(self, parts, expected):
        assert n_stat(P(*parts)) == expected

    @pytest.mark.parametrize("parts, expected", [((3, 2), 5), ((2, 1), 2), ((4, 2, 1), 35), ((1, 1, 1, 1), 1)])
    def test_syt_count(self, parts, expected):
        assert syt_count(P(*parts)) == expected

    def test_hook_lengths(self):
        assert sorted(hook_lengths(P(2, 1))) == [1, 1, 3]

    def test_multinomial(self):
        assert multinomial(P(2, 1)) == 3
        assert multinomial(P(2, 2)) == 6
        assert multinomial(P(1, 1, 1)) == 6

    @pytest.mark.parametrize("n", range(9))
    def test_sum_of_squares_is_factorial(self, n):
        assert sum(syt_count(lam) ** 2 for lam in partitions_iter(n)) == factorial(n)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_syt_count_is_transpose_invariant(self, n):
        for lam in partitions_iter(n):
            assert syt_count(lam) == syt_count(transpose(lam))


class TestThreshold:
    @pytest.mark.parametrize("k, r, expected", [
        (0, 3, ()),
        (1, 2, (1, 1)),
        (2, 2, (2, 2)),
        (2, 3, (1, 1, 1)),
        (3, 3, (2, 2, 1)),
        (4, 3, (2, 2, 2)),
        (3, 4, (1, 1, 1, 1)),
        (5, 1, (1,)),
    ])
    def test_values(self, k, r, expected):
        assert threshold(k, r) == P(*expected)

    def test_limit_shape_is_a_column(self):
        for k in range(1, 8):
            assert threshold(k, k + 1) == P(*([1] * (k + 1)))

    @pytest.mark.parametrize("r", range(2, 10))
    def test_nested_in_k(self, r):
        for k in range(12):
            for smaller in range(k + 1):
                assert contains(threshold(k, r), threshold(smaller, r))

    @pytest.mark.parametrize("r", range(2, 10))
    def test_rows_take_two_adjacent_values(self, r):
        for k in range(20):
            target = threshold(k, r)
            rows = [target.part(i) for i in range(1, r + 1)]
            low = min(rows)
            assert set(rows) <= {low, low + 1}
            raised = rows.count(low + 1)
            assert 0 <= raised <= r - 1
            assert raised != 1

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            threshold(-1, 3)
        with pytest.raises(PreconditionError):
            threshold(2, 0)


class TestLambdaMax:
    def test_extends_first_row(self):
        assert lambda_max(8, 3, 3) == P(5, 2, 1)
        assert lambda_max(5, 3, 3) == threshold(3, 3)

    def test_dominates_every_qualifying_partition(self):
        for k in range(4):
            for r in range(1, 5):
                start = max(threshold(k, r).size, 1)
                for n in range(start, 10):
                    top = lambda_max(n, k, r)
                    assert contains(top, threshold(k, r))
                    for lam in qualifying_partitions(n, k, r):
                        assert dominates(top, lam)

    def test_too_small(self):
        with pytest.raises(PreconditionError):
            lambda_max(4, 3, 3)


class TestEnumeration:
    def test_descending_lex_order(self):
        assert [lam.parts for lam in partitions_iter(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    @pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (5, 7), (8, 22), (10, 42)])
    def test_partition_counts(self, n, count):
        assert sum(1 for _ in partitions_iter(n)) == count

    def test_bounded_parts(self):
        assert [lam.parts for lam in partitions_iter(5, 2)] == [(5,), (4, 1), (3, 2)]

    def test_qualifying(self):
        assert [lam.parts for lam in qualifying_partitions(5, 2, 3)] == [(3, 1, 1), (2, 2, 1)]
