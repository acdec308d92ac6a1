import pytest

from ecstats.arith import (
    factorize,
    integer_cbrt,
    integer_nth_root,
    is_prime,
    next_prime,
    primes_in,
    sieve_primes,
)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(50):
        assert is_prime(n) == (n in primes)


def test_is_prime_carmichael_and_large():
    assert not is_prime(561)
    assert not is_prime(1729)
    assert is_prime(2**31 - 1)
    assert not is_prime(2**32 + 1)


def test_sieve_matches_is_prime():
    assert list(sieve_primes(200)) == [n for n in range(201) if is_prime(n)]


def test_primes_in_and_next_prime():
    assert primes_in(5, 30) == (5, 7, 11, 13, 17, 19, 23, 29)
    assert next_prime(7) == 11
    assert next_prime(0) == 2


@pytest.mark.parametrize("n", [0, 1, 7, 8, 26, 27, 28, 10**8 // 4, 2**60 - 1])
def test_integer_cbrt(n):
    r = integer_cbrt(n)
    assert r**3 <= n < (r + 1) ** 3


def test_integer_nth_root():
    assert integer_nth_root(255, 4) == 3
    assert integer_nth_root(256, 4) == 4
    assert integer_nth_root(0, 6) == 0
    assert integer_nth_root(1, 6) == 1
    r = integer_nth_root(10**30 + 7, 6)
    assert r**6 <= 10**30 + 7 < (r + 1) ** 6


@pytest.mark.parametrize("n", [2, 140, 2**4 * 3**6, 10**6 + 3, 7919 * 7907, 2 * 10**8 - 1])
def test_factorize_roundtrip(n):
    fac = factorize(n)
    prod = 1
    for p, e in fac.items():
        assert is_prime(p)
        prod *= p**e
    assert prod == n


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)
