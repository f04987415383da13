"""Exact integer arithmetic: factorization, totient, divisors, Moebius.

Everything here works on plain Python ints.  Inputs are signal lengths and
periods, so they stay small and trial division is plenty.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Factorization:
    """n = p_1^r_1 * ... * p_m^r_m with p_1 < p_2 < ... and all r_i >= 1."""

    n: int
    factors: tuple[tuple[int, int], ...]


def factorize(n: int) -> Factorization:
    if n < 1:
        raise ValueError(f"factorize needs a positive integer, got {n}")
    factors = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            r = 0
            while rest % p == 0:
                rest //= p
                r += 1
            factors.append((p, r))
        p += 1 if p == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(n, tuple(factors))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    factors = factorize(n).factors
    return len(factors) == 1 and factors[0][1] == 1


def totient(n: int) -> int:
    """Euler's totient phi(n)."""
    if n < 1:
        raise ValueError(f"totient needs a positive integer, got {n}")
    phi = 1
    for p, r in factorize(n).factors:
        phi *= p ** (r - 1) * (p - 1)
    return phi


def divisors(n: int) -> list[int]:
    """All divisors of n in ascending order.

    The ascending order is load-bearing: it fixes the column order of the
    periodic transform basis.
    """
    if n < 1:
        raise ValueError(f"divisors needs a positive integer, got {n}")
    divs = [1]
    for p, r in factorize(n).factors:
        divs = [d * p**e for d in divs for e in range(r + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    """Moebius mu(n): 0 for non-squarefree n, else (-1)^(number of primes)."""
    if n < 1:
        raise ValueError(f"mobius needs a positive integer, got {n}")
    result = 1
    for _, r in factorize(n).factors:
        if r > 1:
            return 0
        result = -result
    return result
