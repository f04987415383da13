"""Independent oracles and frozen golden values shared across test modules.

Everything here is deliberately written from first principles (exponential
sums, pairwise averaging, literal matrices) so it exercises none of the
library's production code paths.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

# Frozen transform matrices, copied digit by digit from the reference tables.
R2 = np.array([[1, 1], [1, -1]])

R3 = np.array([[1, 2, 0], [1, -1, 1], [1, -1, -1]])

R4 = np.array([[1, 1, 1, 0], [1, -1, 0, 1], [1, 1, -1, 0], [1, -1, 0, -1]])

R6 = np.array(
    [
        [1, 1, 2, 0, 2, 0],
        [1, -1, -1, 1, 1, -1],
        [1, 1, -1, -1, -1, -1],
        [1, -1, 2, 0, -2, 0],
        [1, 1, -1, 1, -1, 1],
        [1, -1, -1, -1, 1, 1],
    ]
)

# Frozen orthogonal sequences for prime periods.
ORS_GOLDEN = {
    (3, 0): [2, -1, -1],
    (3, 1): [0, 1, -1],
    (5, 0): [4, -1, -1, -1, -1],
    (5, 1): [0, 3, -1, -1, -1],
    (5, 2): [0, 0, 2, -1, -1],
    (5, 3): [0, 0, 0, 1, -1],
}


def ramanujan_sum_exp(q: int, n: int) -> int:
    """c_q(n) straight from the defining exponential sum."""
    total = sum(
        cmath.exp(2j * cmath.pi * k * n / q) for k in range(1, q + 1) if math.gcd(k, q) == 1
    )
    assert abs(total.imag) < 1e-8
    nearest = round(total.real)
    assert abs(total.real - nearest) < 1e-8
    return nearest


def ors_prime_definition(q: int, k: int) -> list[int]:
    """The step/impulse form of the prime sequence definition:
    u(n mod q - k) * c_q(n - k) - k * delta(n mod q - k)."""
    out = []
    for n in range(q):
        value = ramanujan_sum_exp(q, n - k) if n % q >= k else 0
        if n % q == k:
            value -= k
        out.append(value)
    return out


def haar_dwt(x, stages: int):
    """Textbook orthonormal Haar analysis by pairwise averaging/differencing.

    Returns (smooth, details) with details[l-1] holding the stage-l band.
    """
    smooth = np.asarray(x, dtype=float)
    details = []
    for _ in range(stages):
        even, odd = smooth[0::2], smooth[1::2]
        details.append((even - odd) / math.sqrt(2))
        smooth = (even + odd) / math.sqrt(2)
    return smooth, details


def haar2d_single_stage(a):
    """One 2-D Haar stage, rows then columns, bands tiled [[LL, LH], [HL, HH]]."""
    a = np.asarray(a, dtype=float)
    rows = np.hstack(
        [(a[:, 0::2] + a[:, 1::2]) / math.sqrt(2), (a[:, 0::2] - a[:, 1::2]) / math.sqrt(2)]
    )
    return np.vstack(
        [(rows[0::2, :] + rows[1::2, :]) / math.sqrt(2), (rows[0::2, :] - rows[1::2, :]) / math.sqrt(2)]
    )
