import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gctkit.errors import DomainError
from gctkit.partitions import (
    SLWeight,
    class_size,
    conjugate,
    count_in_rectangle,
    enumerate_partitions,
    format_partition,
    interlaces,
    interlacing_lifts,
    irrep_dimension,
    min_partition_of,
    parse_partition,
    partition,
    rectangle_complement,
    size,
    sl_weight_of,
    strip_full_columns,
)

partitions_st = st.lists(st.integers(1, 6), max_size=6).map(lambda xs: tuple(sorted(xs, reverse=True)))


def test_enumerate_examples():
    assert enumerate_partitions(0) == [()]
    assert enumerate_partitions(4, max_length=2) == [(4,), (3, 1), (2, 2)]
    assert enumerate_partitions(2, max_part=2) == [(2,), (1, 1)]


def test_enumerate_counts_match_partition_numbers():
    # p(n) for n = 0..12
    assert [len(enumerate_partitions(n)) for n in range(13)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def test_enumerate_is_decreasing_lex():
    ps = enumerate_partitions(8)
    assert ps == sorted(ps, reverse=True)


def test_enumerate_negative_size():
    with pytest.raises(DomainError):
        enumerate_partitions(-1)


def test_partition_normalises_and_validates():
    assert partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(DomainError):
        partition([1, 2])
    with pytest.raises(DomainError):
        partition([2, -1])


def test_text_form_round_trip():
    assert format_partition((3, 1)) == "[3,1]"
    assert parse_partition("[3,1]") == (3, 1)
    assert parse_partition("[]") == ()
    with pytest.raises(DomainError):
        parse_partition("[1,2]")
    with pytest.raises(DomainError):
        parse_partition("3,1")


def test_conjugate_examples():
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((3,)) == (1, 1, 1)
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)


@given(partitions_st)
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p
    assert size(conjugate(p)) == size(p)


def test_interlaces_examples():
    assert interlaces((3,), (2,))
    assert interlaces((2, 1), (2,))
    assert not interlaces((2, 2), (1,))


@given(partitions_st, partitions_st)
def test_interlacing_size_and_length(p, q):
    if interlaces(p, q):
        assert size(p) >= size(q)
        assert len(q) <= len(p) <= len(q) + 1


@given(partitions_st, st.integers(0, 4))
def test_interlacing_lifts_are_exactly_the_interlacing_partitions(q, extra):
    total = size(q) + extra
    expected = [p for p in enumerate_partitions(total) if interlaces(p, q)]
    assert interlacing_lifts(q, total) == expected


def test_count_in_rectangle_examples():
    assert count_in_rectangle(0, 3, 4) == 1
    assert count_in_rectangle(2, 2, 2) == 2
    assert count_in_rectangle(5, 2, 2) == 0


@given(st.integers(0, 12), st.integers(1, 4), st.integers(1, 4))
def test_count_in_rectangle_by_enumeration(b, rows, cols):
    expected = len(enumerate_partitions(b, max_length=rows, max_part=cols))
    assert count_in_rectangle(b, rows, cols) == expected
    assert count_in_rectangle(b, cols, rows) == expected


def test_rectangle_complement():
    assert rectangle_complement((2, 1), 2, 2) == (1,)
    assert rectangle_complement((2,), 2, 2) == (2,)
    assert rectangle_complement((3,), 2, 2) is None


def test_sl_weight_examples():
    assert sl_weight_of((2,), 2) == SLWeight((2,), 2)
    assert sl_weight_of((3, 3, 3), 3).is_zero()
    assert sl_weight_of((3, 1), 3) == SLWeight((2, 1), 3)
    with pytest.raises(DomainError):
        sl_weight_of((1, 1, 1), 2)


def test_min_partition_examples():
    assert min_partition_of(SLWeight((0, 0), 3)) == ()
    assert min_partition_of(SLWeight((2,), 2)) == (2,)
    assert min_partition_of(SLWeight((2, 1), 3)) == (3, 1)


@given(partitions_st, st.integers(1, 7))
def test_min_partition_strips_full_columns(p, rank):
    if len(p) > rank:
        return
    q = min_partition_of(sl_weight_of(p, rank))
    k = p[rank - 1] if len(p) >= rank else 0
    assert q == partition([x - k for x in p])
    assert q == strip_full_columns(p, rank)


def test_class_size_examples():
    assert class_size((1, 1, 1)) == 1
    assert class_size((2, 1)) == 3
    assert class_size((3,)) == 2


@pytest.mark.parametrize("n", range(1, 13))
def test_class_sizes_sum_to_factorial(n):
    assert sum(class_size(t) for t in enumerate_partitions(n)) == math.factorial(n)


def test_irrep_dimension_examples():
    assert irrep_dimension((5,)) == 1
    assert irrep_dimension((2, 1)) == 2
    assert irrep_dimension((2, 2)) == 2


@pytest.mark.parametrize("n", range(1, 11))
def test_dimension_squares_sum_to_factorial(n):
    assert sum(irrep_dimension(p) ** 2 for p in enumerate_partitions(n)) == math.factorial(n)
