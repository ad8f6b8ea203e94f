import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powerful_lab.generate import (
    Interval,
    count_kfull_interval,
    count_kfull_upto,
    count_smooth_kfull_interval,
    count_squarefull_interval,
    enumerate_kfull_interval,
    enumerate_kfull_upto,
    enumerate_smooth_kfull_interval,
    enumerate_squarefull_interval,
)
from powerful_lab.intcore import NAT_MAX, NatOverflowError, factorize

from oracles import kfull_in

SQUAREFULL_TO_100 = [1, 4, 8, 9, 16, 25, 27, 32, 36, 49, 64, 72, 81, 100]


def test_squarefull_list_to_100_matches_oracle():
    assert kfull_in(1, 100, 2) == SQUAREFULL_TO_100


def test_interval_validation():
    with pytest.raises(ValueError):
        Interval(-1, 5)
    with pytest.raises(ValueError):
        Interval(5, 0)
    with pytest.raises(NatOverflowError):
        Interval(NAT_MAX, 1)
    iv = Interval(280, 20)
    assert 300 in iv and 280 not in iv and iv.hi == 300


def test_enumerate_upto_examples():
    assert enumerate_kfull_upto(50, 2) == [1, 4, 8, 9, 16, 25, 27, 32, 36, 49]
    got = enumerate_kfull_upto(100, 2)
    assert len(got) == 14 and got[-2:] == [81, 100]
    for k in (2, 3, 7):
        assert enumerate_kfull_upto(1, k) == [1]


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_enumerate_upto_against_oracle(k):
    assert enumerate_kfull_upto(200_000, k) == kfull_in(1, 200_000, k)


def test_squarefull_interval_examples():
    assert enumerate_squarefull_interval(Interval(280, 20)) == [288, 289]
    assert enumerate_squarefull_interval(Interval(0, 4)) == [1, 4]
    assert enumerate_squarefull_interval(Interval(287, 2)) == [288, 289]
    assert factorize(288) == [(2, 5), (3, 2)] and factorize(289) == [(17, 2)]


def test_kfull_interval_examples():
    assert enumerate_kfull_interval(Interval(26, 10), 3) == [27, 32]
    assert enumerate_kfull_interval(Interval(289, 34), 2) == []
    assert {108, 216, 288, 289} <= set(enumerate_kfull_interval(Interval(0, 300), 2))
    assert enumerate_kfull_interval(Interval(0, 300), 2) == kfull_in(1, 300, 2)


def test_smooth_examples():
    assert enumerate_smooth_kfull_interval(Interval(0, 100), 2, 10) == SQUAREFULL_TO_100
    five = enumerate_smooth_kfull_interval(Interval(0, 100), 2, 5)
    assert 49 not in five and five == [n for n in SQUAREFULL_TO_100 if n != 49]
    assert enumerate_smooth_kfull_interval(Interval(0, 100), 2, 1) == [1]
    assert enumerate_smooth_kfull_interval(Interval(5, 100), 3, 1) == []


def test_oracle_equivalence_random_intervals():
    rng = random.Random(2024)
    for _ in range(1000):
        x = rng.randrange(0, 10**7 + 1)
        y = rng.randrange(1, 10**4 + 1)
        iv = Interval(x, y)
        expected = kfull_in(x + 1, x + y, 2)
        param = enumerate_squarefull_interval(iv)
        assert param == expected, (x, y)
        assert enumerate_kfull_interval(iv, 2) == expected, (x, y)
        assert count_squarefull_interval(iv) == len(expected)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_dfs_higher_k_random_intervals(k):
    rng = random.Random(k)
    for _ in range(100):
        x = rng.randrange(0, 10**8)
        y = rng.randrange(1, 10**5)
        iv = Interval(x, y)
        expected = kfull_in(x + 1, x + y, k)
        assert enumerate_kfull_interval(iv, k) == expected
        assert count_kfull_interval(iv, k) == len(expected)


def test_smooth_random_against_oracle():
    rng = random.Random(99)
    for _ in range(200):
        x = rng.randrange(0, 10**7)
        y = rng.randrange(1, 5000)
        k = rng.choice([2, 3])
        B = rng.randrange(1, 400)
        expected = kfull_in(x + 1, x + y, k, smooth=B)
        iv = Interval(x, y)
        assert enumerate_smooth_kfull_interval(iv, k, B) == expected
        assert count_smooth_kfull_interval(iv, k, B) == len(expected)


def test_parametrization_is_duplicate_free_near_1e18():
    for x in (10**18 - 10**5, 10**15, 999_999_999_999):
        got = enumerate_squarefull_interval(Interval(x, 10**5))
        assert got == sorted(set(got))
        assert got == enumerate_kfull_interval(Interval(x, 10**5), 2)


def test_large_endpoint_final_block_beyond_sieve():
    # 10^9+7 squared sits far past any sieved range
    p = 1_000_000_007
    iv = Interval(p * p - 1, 1)
    assert enumerate_squarefull_interval(iv) == [p * p]
    assert enumerate_kfull_interval(iv, 2) == [p * p]


@given(st.integers(0, 10**6), st.integers(1, 3000), st.integers(2, 6))
@settings(max_examples=60, deadline=None)
def test_smooth_kfull_subset_of_smooth_squarefull(x, y, k):
    iv = Interval(x, y)
    B = 50
    assert set(enumerate_smooth_kfull_interval(iv, k, B)) <= set(enumerate_smooth_kfull_interval(iv, 2, B))


@given(st.integers(0, 10**9), st.lists(st.integers(1, 5000), min_size=1, max_size=6), st.integers(2, 4))
@settings(max_examples=60, deadline=None)
def test_partition_additivity(x, lengths, k):
    total = count_kfull_interval(Interval(x, sum(lengths)), k)
    parts, start = 0, x
    for length in lengths:
        parts += count_kfull_interval(Interval(start, length), k)
        start += length
    assert parts == total


def test_counts_upto_agree_between_routes():
    for N in (1, 2, 99, 10**6, 10**9 + 7):
        assert count_kfull_upto(N, 2) == count_squarefull_interval(Interval(0, N))


def test_upto_rejects_zero():
    with pytest.raises(ValueError):
        enumerate_kfull_upto(0, 2)
    with pytest.raises(ValueError):
        enumerate_kfull_upto(10, 1)
