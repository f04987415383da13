"""Ramanujan sums and their orthogonal variants.

The classical Ramanujan sum c_q(n) is the sum of e^(j*2*pi*k*n/q) over the
residues k coprime to q.  It is integer valued and periodic in n with period
q, but the shifted copies needed to span a full signal space are not
orthogonal.  The sequences built here fix that: for a prime q there are q-1
mutually orthogonal integer sequences, and products of their zero-interpolated
prime power versions extend the family to arbitrary periods.

Everything in this module is exact integer arithmetic (int64 vectors); no
floating point enters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .number_theory import factorize, is_prime, mobius, totient


@dataclass(frozen=True)
class ORSVector:
    """One orthogonal Ramanujan sequence over an ambient length.

    samples repeat with the stated period.  j and k hold one shift index and
    one phase index per prime factor of the period, in ascending prime order.
    """

    period: int
    length: int
    samples: np.ndarray  # int64, shape (length,)
    j: tuple[int, ...]
    k: tuple[int, ...]
    sq_norm: int


def ramanujan_sum(q: int, length: int) -> np.ndarray:
    """Classical Ramanujan sum c_q(n) for n = 0..length-1.

    Computed through the gcd/Moebius closed form
    c_q(n) = mu(q/g) * phi(q) / phi(q/g) with g = gcd(n, q), which keeps the
    arithmetic in exact integers.  The exponential-sum definition serves as
    the independent oracle in the tests.
    """
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    if length < 1 or length % q != 0:
        raise ValueError(f"length must be a positive multiple of q={q}, got {length}")
    phi_q = totient(q)
    one_period = np.empty(q, dtype=np.int64)
    for n in range(q):
        d = q // math.gcd(n, q)
        mu = mobius(d)
        one_period[n] = 0 if mu == 0 else mu * (phi_q // totient(d))
    return np.tile(one_period, length // q)


def ors_prime(q: int, k: int) -> np.ndarray:
    """Orthogonal Ramanujan sequence of prime period q, phase k.

    One period is: k zeros, the value q-1-k, then q-1-k entries of -1.
    k = 0 reproduces c_q; raising k trades the leading support for zeros so
    that distinct phases are orthogonal over one period.
    """
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if not 0 <= k <= q - 2:
        raise ValueError(f"k must lie in [0, {q - 2}] for q={q}, got {k}")
    out = np.full(q, -1, dtype=np.int64)
    out[:k] = 0
    out[k] = q - 1 - k
    return out


def ors_prime_power(q: int, l: int, k: int, j: int) -> ORSVector:
    """ORS of period q**l: the prime sequence zero-interpolated by q**(l-1),
    then circularly shifted by j.

    Interpolation keeps unit amplitude (no q**(l-1) gain), matching the
    printed transform matrices; any rescaling happens downstream during
    normalization.
    """
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    base = ors_prime(q, k)  # validates q prime and k range
    step = q ** (l - 1)
    if not 0 <= j <= step - 1:
        raise ValueError(f"j must lie in [0, {step - 1}] for q={q}, l={l}, got {j}")
    period = q**l
    samples = np.zeros(period, dtype=np.int64)
    samples[::step] = base
    samples = np.roll(samples, j)
    return ORSVector(period, period, samples, (j,), (k,), int(samples @ samples))


def ors_divisor(d: int, k: tuple[int, ...], j: tuple[int, ...], length: int) -> ORSVector:
    """ORS of composite period d > 1 over an ambient length divisible by d.

    The sequence is the pointwise product of one prime power ORS per prime
    factor of d, each tiled to the ambient length.  Because the factor
    periods are coprime, the product has period exactly d and its square
    norm factorizes as (length/d) * prod_i (p_i - k_i)(p_i - k_i - 1).
    """
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    if length < 1 or length % d != 0:
        raise ValueError(f"length must be a positive multiple of d={d}, got {length}")
    factors = factorize(d).factors
    k = tuple(int(v) for v in k)
    j = tuple(int(v) for v in j)
    if len(k) != len(factors) or len(j) != len(factors):
        raise ValueError(
            f"d={d} has {len(factors)} prime factors; got k of arity {len(k)} and j of arity {len(j)}"
        )
    samples = np.ones(length, dtype=np.int64)
    for (p, r), ki, ji in zip(factors, k, j):
        part = ors_prime_power(p, r, ki, ji)
        samples *= np.tile(part.samples, length // part.period)
    return ORSVector(d, length, samples, j, k, int(samples @ samples))
