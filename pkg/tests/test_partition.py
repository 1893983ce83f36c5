import warnings

import pytest
from hypothesis import given, strategies as st

from skewtca.partition import (EMPTY, OddSizeWarning, Partition, brace, complement_in_rect,
                               even_partitions, partitions, partitions_in_box, q1_contains,
                               q1_of_size, rectangle, super_highest_weight, transpose, unbrace)

partition_st = st.lists(st.integers(1, 6), max_size=6).map(lambda xs: Partition(sorted(xs, reverse=True)))


def partition_count(m):
    # Euler's pentagonal recurrence, independent of the generator
    p = [1] + [0] * m
    for k in range(1, m + 1):
        total, j = 0, 1
        while True:
            for g in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2):
                if g > k:
                    break
                total += (-1) ** (j + 1) * p[k - g]
            if j * (3 * j - 1) // 2 > k:
                break
            j += 1
        p[k] = total
    return p[m]


def test_parse_and_format():
    assert Partition.parse("3,1") == Partition((3, 1))
    assert Partition.parse("-") == EMPTY
    assert str(Partition((2, 2, 1))) == "2,2,1"
    assert str(EMPTY) == "-"
    assert Partition((3, 1, 0, 0)) == Partition((3, 1))


def test_rejects_increasing_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_transpose_examples():
    assert transpose((3, 1)) == Partition((2, 1, 1))
    assert transpose(()) == EMPTY
    assert rectangle(2, 3).transpose() == rectangle(3, 2)


@given(partition_st)
def test_transpose_is_involution(lam):
    assert lam.transpose().transpose() == lam
    assert lam.transpose().size == lam.size


@given(partition_st)
def test_arm_leg_match_cells(lam):
    conj = lam.transpose()
    for i, j in lam.cells():
        assert lam.arm(i, j) == lam.part(i) - j
        assert lam.leg(i, j) == conj.part(j) - i


@pytest.mark.parametrize("m", range(0, 16))
def test_partition_counts(m):
    ps = list(partitions(m))
    assert len(ps) == partition_count(m)
    assert ps == sorted(ps, reverse=True)
    assert len(set(ps)) == len(ps)


def test_box_enumeration():
    box = list(partitions_in_box(2, 2))
    assert len(box) == 6  # C(4, 2)
    assert all(p.fits_in(2, 2) for p in box)


def test_q1_small_sizes():
    assert q1_of_size(0) == [EMPTY]
    assert q1_of_size(2) == [Partition((2,))]
    assert q1_of_size(4) == [Partition((3, 1))]
    assert q1_of_size(6) == [Partition((4, 1, 1)), Partition((3, 3))]


def test_q1_odd_size_warns():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        assert q1_of_size(5) == []
    assert any(issubclass(w.category, OddSizeWarning) for w in caught)


@given(partition_st)
def test_q1_membership_matches_hook_rule(lam):
    diag = [(i, i) for i in range(1, len(lam) + 1) if lam.part(i) >= i]
    expected = all(lam.arm(i, j) == lam.leg(i, j) + 1 for i, j in diag)
    assert q1_contains(lam) == expected


@given(partition_st, st.integers(1, 4))
def test_brace_roundtrip(mu, n):
    if len(mu) > n:
        with pytest.raises(ValueError):
            brace(mu, n)
        return
    lam = brace(mu, n)
    assert lam.size == mu.size * 2 + n * (n + 1)
    assert rectangle(n, n + 1).fits_in(len(lam), lam.part(1))
    assert unbrace(lam, n) == (mu, n)


def test_brace_examples():
    assert brace(EMPTY, 1) == Partition((2,))
    assert brace(Partition((1,)), 1) == Partition((3, 1))
    assert brace(EMPTY, 2) == Partition((3, 3))
    assert unbrace(Partition((4, 2)), 1) is None


def test_complement_in_rect():
    assert complement_in_rect(Partition((2, 1)), 2, 2) == Partition((1,))
    assert complement_in_rect(Partition((3,)), 2, 2) is None


def test_even_partitions():
    assert even_partitions(2) == [Partition((4,)), Partition((2, 2))]


def test_super_highest_weight():
    assert super_highest_weight(Partition((3, 1)), 1, 1) == ((3,), (1,))
    assert super_highest_weight(Partition((5, 3, 1, 1)), 2, 2) == ((5, 3), (2, 0))
    assert super_highest_weight(Partition((2, 2)), 1, 1) is None
