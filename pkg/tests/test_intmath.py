import math
import random

import pytest
from hypothesis import given, strategies as st

from truncbin.errors import DomainError
from truncbin.intmath import (
    binom,
    is_odd_prime,
    is_prime,
    odd_primes_up_to,
    truncated_binomial_sum,
    truncated_binomial_value,
    valuation,
)

SMALL_PRIMES = odd_primes_up_to(101)


def test_binom_small_values():
    assert binom(5, 2) == 10
    assert binom(9, 0) == 1
    assert binom(9, 9) == 1
    # multiplicative oracle: 11*10*9*8*7 / 5!
    assert binom(11, 5) == 11 * 10 * 9 * 8 * 7 // math.factorial(5) == 462


def test_binom_rejects_bad_arguments():
    with pytest.raises(DomainError):
        binom(5, 6)
    with pytest.raises(DomainError):
        binom(-1, 0)
    with pytest.raises(DomainError):
        binom(3, -2)


@given(st.integers(min_value=0, max_value=250), st.integers(min_value=0, max_value=250))
def test_binom_matches_stdlib(n, v):
    if v > n:
        with pytest.raises(DomainError):
            binom(n, v)
    else:
        assert binom(n, v) == math.comb(n, v)


@given(st.integers(min_value=0, max_value=150), st.integers(min_value=0, max_value=150))
def test_binom_row_symmetry(n, v):
    if v <= n:
        assert binom(n, v) == binom(n, n - v)


def test_prime_rows_divisible_by_prime():
    for n in SMALL_PRIMES:
        assert all(binom(n, v) % n == 0 for v in range(1, n))


def test_primality_helpers():
    assert [p for p in range(50) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
    assert not is_odd_prime(2)
    assert is_odd_prime(3)
    assert odd_primes_up_to(17) == [3, 5, 7, 11, 13, 17]
    assert len(odd_primes_up_to(100)) == 24


def test_valuation_examples():
    assert valuation(90, 3).value == 2  # 90 = 2 * 3**2 * 5
    assert valuation(2100, 5).value == 2  # 2100 = 2**2 * 3 * 5**2 * 7
    assert valuation(7, 5).value == 0
    assert valuation(-250, 5).value == 3


def test_valuation_of_zero_is_infinite():
    v = valuation(0, 7)
    assert v.infinite
    assert not valuation(7, 7).infinite


def test_valuation_rejects_non_prime_base():
    for p in (1, 0, -5, 4, 9):
        with pytest.raises(DomainError):
            valuation(10, p)


@given(st.integers(min_value=-10**9, max_value=10**9).filter(lambda x: x != 0),
       st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_valuation_multiplicativity(x, p):
    assert valuation(x * p, p).value == valuation(x, p).value + 1


def test_truncated_binomial_small_values():
    assert truncated_binomial_value(1, 1, 3) == 6
    assert truncated_binomial_value(1, 2, 5) == 210 == 5 * 1 * 2 * 3 * 7
    assert truncated_binomial_value(1, 1, 7) == 126 == 7 * 2 * 3**2
    assert truncated_binomial_value(9, 0, 11) == 0
    assert truncated_binomial_value(0, -4, 5) == 0


def test_truncated_binomial_symmetry_and_evenness():
    rng = random.Random(90125)
    for _ in range(1000):
        a = rng.randint(-10**6, 10**6)
        b = rng.randint(-10**6, 10**6)
        n = rng.choice(SMALL_PRIMES[:6])
        u = truncated_binomial_value(a, b, n)
        assert u == truncated_binomial_value(b, a, n)
        assert u % 2 == 0


@given(
    st.integers(min_value=-10**4, max_value=10**4),
    st.integers(min_value=-10**4, max_value=10**4),
    st.integers(min_value=2, max_value=12),
)
def test_truncated_binomial_sum_agrees_with_closed_form(a, b, n):
    assert truncated_binomial_sum(a, b, n) == truncated_binomial_value(a, b, n)
