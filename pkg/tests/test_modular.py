import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leecodes.modular import (
    factorize,
    factorize_p_minus_1,
    is_prime,
    mul_mod,
    multiplicative_order,
    pow_mod,
    subgroup_dlog,
)
from oracles import dlog_loop, is_prime_trial, order_loop, prime_sieve


def test_mul_mod_examples():
    assert mul_mod(3, 4, 13) == 12
    assert mul_mod(0, 123456789, 1000003) == 0
    m = 2 * 10**10 + 1
    assert mul_mod(10**10, 10**10, m) == 15000000001


def test_mul_mod_random_63bit_triples():
    rng = random.Random(20261016)
    for _ in range(10_000):
        m = rng.randrange(2, 2**63)
        a, b = rng.randrange(m), rng.randrange(m)
        assert mul_mod(a, b, m) == (a * b) % m


def test_pow_mod_examples():
    assert pow_mod(4, 2, 13) == 3
    assert pow_mod(7, 0, 13) == 1
    assert pow_mod(4, 23, 61) == 39
    assert (39 + 4 * 5 + 2) % 61 == 0


@given(st.integers(2, 2**63), st.integers(0, 2**64), st.integers(0, 10**6), st.integers(0, 10**6))
def test_pow_mod_adds_exponents(m, g, x, y):
    g %= m
    assert pow_mod(g, x + y, m) == mul_mod(pow_mod(g, x, m), pow_mod(g, y, m), m)
    assert pow_mod(g, x, m) == pow(g, x, m)


def test_is_prime_examples():
    assert is_prime(61)
    assert not is_prime(25)
    v = 2 * (10**5) ** 2 + 2 * 10**5 + 1
    assert is_prime(v) == is_prime_trial(v) == False  # noqa: E712


def test_is_prime_matches_sieve_up_to_a_million():
    flags = prime_sieve(10**6)
    assert [v for v in range(10**6 + 1) if is_prime(v)] == [v for v in range(10**6 + 1) if flags[v]]


@pytest.mark.parametrize("v, expected", [
    (3215031751, False),            # strong pseudoprime to bases 2, 3, 5, 7
    (3825123056546413051, False),   # strong pseudoprime to bases up to 23
    (2**61 - 1, True),
    (2**62 - 57, True),
    (2**63 - 25, True),
    ((2**31 - 1) * (2**31 + 11), False),
])
def test_is_prime_large(v, expected):
    assert is_prime(v) is expected


@pytest.mark.parametrize("v, expected", [
    (12, {2: 2, 3: 1}),
    (60, {2: 2, 3: 1, 5: 1}),
    (40, {2: 3, 5: 1}),
    (2, {2: 1}),
    (999983 * 1000003, {999983: 1, 1000003: 1}),
    ((2**31 - 1) ** 2, {2**31 - 1: 2}),
])
def test_factorize(v, expected):
    assert factorize(v) == expected


@given(st.integers(2, 10**12))
@settings(max_examples=200)
def test_factorize_product_and_primality(v):
    f = factorize(v)
    assert list(f) == sorted(f)
    prod = 1
    for prime, exp in f.items():
        assert is_prime(prime) and exp >= 1
        prod *= prime**exp
    assert prod == v


@given(st.integers(1, 10**6))
@settings(max_examples=200)
def test_factorize_p_minus_1_shape(n):
    p = 2 * n * n + 2 * n + 1
    f = factorize_p_minus_1(n)
    prod = 1
    for prime, exp in f.items():
        prod *= prime**exp
    assert prod == p - 1


@pytest.mark.parametrize("g, p, expected", [(4, 5, 2), (4, 13, 6), (4, 61, 30)])
def test_multiplicative_order_examples(g, p, expected):
    assert multiplicative_order(g, p, factorize(p - 1)) == expected
    assert order_loop(g, p) == expected


def test_multiplicative_order_rejects_zero():
    with pytest.raises(ValueError):
        multiplicative_order(13, 13)


def _sample_primes():
    rng = random.Random(7)
    flags = prime_sieve(10**5)
    primes = [v for v in range(3, 10**5) if flags[v]]
    return rng.sample(primes, 60) + [5, 13, 41, 61, 113]


@pytest.mark.parametrize("p", _sample_primes())
def test_order_properties(p):
    rng = random.Random(p)
    for g in [4] + [rng.randrange(1, p) for _ in range(3)]:
        b = multiplicative_order(g, p)
        assert b == order_loop(g, p)
        assert (p - 1) % b == 0
        assert pow_mod(g, b, p) == 1
        for prime in factorize(b) if b > 1 else {}:
            assert pow_mod(g, b // prime, p) != 1


def test_subgroup_dlog_examples():
    assert subgroup_dlog(3, 4, 6, 13) == 2
    assert subgroup_dlog(39, 4, 30, 61) == 23
    assert subgroup_dlog(2, 4, 6, 13) is None
    assert subgroup_dlog(1, 4, 6, 13) == 6


@pytest.mark.parametrize("p", _sample_primes())
def test_subgroup_dlog_matches_loop(p):
    rng = random.Random(p + 1)
    b = multiplicative_order(4, p)
    for target in [1, 4 % p, p - 1] + [rng.randrange(1, p) for _ in range(5)]:
        k = subgroup_dlog(target, 4, b, p)
        assert k == dlog_loop(target, 4, p)
        if k is not None:
            assert 1 <= k <= b and pow_mod(4, k, p) == target


def test_subgroup_dlog_exhaustive_small_prime():
    p = 61
    b = multiplicative_order(4, p)
    for target in range(1, p):
        assert subgroup_dlog(target, 4, b, p) == dlog_loop(target, 4, p)
