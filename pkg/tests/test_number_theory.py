import math

import pytest
from hypothesis import given, strategies as st

from ramwave.number_theory import Factorization, divisors, factorize, is_prime, mobius, totient


def test_factorize_golden():
    assert factorize(12) == Factorization(12, ((2, 2), (3, 1)))
    assert factorize(1) == Factorization(1, ())
    assert factorize(360) == Factorization(360, ((2, 3), (3, 2), (5, 1)))


@pytest.mark.parametrize("bad", [0, -3])
def test_factorize_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        factorize(bad)


def test_totient_golden():
    assert totient(1) == 1
    assert totient(12) == 4
    assert totient(9) == 6
    with pytest.raises(ValueError):
        totient(0)


def test_divisors_golden():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert divisors(9) == [1, 3, 9]
    with pytest.raises(ValueError):
        divisors(0)


def test_totient_brute_force_small():
    for n in range(1, 300):
        assert totient(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_totient_divisor_sum_identity():
    # sum of phi over the divisors of n recovers n, for every n up to 10000
    limit = 10000
    phi = list(range(limit + 1))  # sieve: phi[p*k] loses the p-th fraction
    for p in range(2, limit + 1):
        if phi[p] == p:  # p prime
            for multiple in range(p, limit + 1, p):
                phi[multiple] -= phi[multiple] // p
    for n in range(1, limit + 1):
        assert sum(phi[d] for d in divisors(n)) == n
    # and the sieve agrees with the library totient on a sample
    for n in range(1, 500):
        assert phi[n] == totient(n)


def test_mobius_small():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_is_prime_small():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


@given(st.integers(min_value=1, max_value=200000))
def test_factorize_recombines(n):
    fac = factorize(n)
    prod = 1
    for p, r in fac.factors:
        assert r >= 1
        assert is_prime(p)
        prod *= p**r
    assert prod == n
    assert [p for p, _ in fac.factors] == sorted({p for p, _ in fac.factors})


@given(st.integers(min_value=1, max_value=5000))
def test_totient_from_factorization(n):
    phi = 1
    for p, r in factorize(n).factors:
        phi *= p ** (r - 1) * (p - 1)
    assert totient(n) == phi
