"""Orthogonal Ramanujan sequences, the periodic transform they span, and the
q-band wavelet filter banks built on top of them."""

from .number_theory import Factorization, divisors, factorize, is_prime, mobius, totient
from .ors import ORSVector, ors_divisor, ors_prime, ors_prime_power, ramanujan_sum
from .orpt import (
    BasisLabel,
    OrptBasis,
    OrptCoefficients,
    build_basis,
    detect_periods,
    divisor_labels,
    forward,
    inverse,
    period_energies,
)
from .filterbank import (
    EquivalentFilterBank,
    FilterBank,
    WaveletDecomposition,
    analyze_multistage,
    analyze_nonrecursive,
    analyze_stage,
    circular_convolve,
    equivalent_filters,
    filters_from_rq,
    modulation_identity_check,
    synthesize_multistage,
    synthesize_nonrecursive,
    synthesize_stage,
    verify_unitary,
)
from .image2d import ImagePlane, cumulative_energy, forward2d, inverse2d, topk_reconstruct

__version__ = "0.1.0"
