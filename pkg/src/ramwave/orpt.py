"""Orthogonal periodic transform on Z_N built from Ramanujan sequences.

For every divisor d of N there are phi(d) basis sequences of period exactly
d, so the columns total sum_{d|N} phi(d) = N and form an integer orthogonal
basis.  Projecting a signal onto the columns of one divisor measures how much
of the signal lives at that period, which is what the period detector uses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

import numpy as np

from .number_theory import divisors, factorize
from .ors import ors_divisor


class BasisLabel(NamedTuple):
    divisor: int
    j: tuple[int, ...]
    k: tuple[int, ...]


@dataclass(frozen=True)
class OrptBasis:
    n: int
    matrix: np.ndarray  # (n, n) int64; column c holds basis sequence c
    labels: tuple[BasisLabel, ...]
    sq_norms: np.ndarray  # (n,) int64 column square norms


@dataclass(frozen=True)
class OrptCoefficients:
    n: int
    beta: np.ndarray
    labels: tuple[BasisLabel, ...]
    normalized: bool = False


def divisor_labels(d: int) -> list[BasisLabel]:
    """The phi(d) labels for divisor d in transform column order.

    Order within a divisor: the phase tuple k moves lexicographically in the
    outer loop (first prime slowest), the shift tuple j lexicographically in
    the inner loop.
    """
    if d == 1:
        return [BasisLabel(1, (), ())]
    factors = factorize(d).factors
    k_ranges = [range(p - 1) for p, _ in factors]
    j_ranges = [range(p ** (r - 1)) for p, r in factors]
    return [BasisLabel(d, j, k) for k in product(*k_ranges) for j in product(*j_ranges)]


def build_basis(n: int) -> OrptBasis:
    """Assemble the N x N integer basis matrix, divisors ascending."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    cols = []
    labels: list[BasisLabel] = []
    for d in divisors(n):
        for label in divisor_labels(d):
            if d == 1:
                cols.append(np.ones(n, dtype=np.int64))
            else:
                cols.append(ors_divisor(d, label.k, label.j, n).samples)
            labels.append(label)
    matrix = np.stack(cols, axis=1)
    sq_norms = np.einsum("ij,ij->j", matrix, matrix)
    return OrptBasis(n, matrix, tuple(labels), sq_norms)


def forward(x, basis: OrptBasis, normalized: bool = False) -> OrptCoefficients:
    """Project x onto the basis columns.

    Unnormalized mode divides each inner product by the column square norm,
    so beta are the expansion coefficients of x in the raw integer columns.
    Normalized mode divides by the column norm, making the map orthonormal.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (basis.n,):
        raise ValueError(f"signal length {x.shape} does not match basis size {basis.n}")
    inner = basis.matrix.T @ x
    denom = np.sqrt(basis.sq_norms) if normalized else basis.sq_norms
    return OrptCoefficients(basis.n, inner / denom, basis.labels, normalized)


def inverse(coeffs: OrptCoefficients, basis: OrptBasis) -> np.ndarray:
    if coeffs.n != basis.n:
        raise ValueError(f"coefficient length {coeffs.n} does not match basis size {basis.n}")
    beta = np.asarray(coeffs.beta, dtype=float)
    if coeffs.normalized:
        beta = beta / np.sqrt(basis.sq_norms)
    return basis.matrix @ beta


def period_energies(x, basis: OrptBasis) -> dict[int, float]:
    """Energy captured by each divisor's subspace; values sum to ||x||^2."""
    x = np.asarray(x, dtype=float)
    if x.shape != (basis.n,):
        raise ValueError(f"signal length {x.shape} does not match basis size {basis.n}")
    beta = (basis.matrix.T @ x) / np.sqrt(basis.sq_norms)
    energies: dict[int, float] = {}
    for label, b in zip(basis.labels, beta):
        energies[label.divisor] = energies.get(label.divisor, 0.0) + float(b) ** 2
    return dict(sorted(energies.items()))


def detect_periods(x, basis: OrptBasis, threshold: float = 1e-6) -> tuple[list[int], int]:
    """Divisors whose relative energy exceeds the threshold, plus the period.

    The reported period is the lcm of the detected divisors above 1; a zero
    signal yields no detected divisors (and period 1 by the lcm convention).
    """
    x = np.asarray(x, dtype=float)
    total = float(x @ x)
    if total == 0.0:
        return [], 1
    energies = period_energies(x, basis)
    detected = [d for d, e in energies.items() if e / total > threshold]
    period = math.lcm(*[d for d in detected if d > 1])
    return detected, period
