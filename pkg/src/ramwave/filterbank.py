"""q-band wavelet filter banks on Z_N derived from the length-q transform.

The q normalized basis sequences of the length-q transform, zero padded to
the signal length N, give q analysis filters u_1..u_q whose shifts by
multiples of q form an orthonormal basis of C^N.  Analysis circularly
convolves with the time-reversed conjugate filters and downsamples by q;
synthesis upsamples and convolves with the filters themselves, which is
perfect reconstruction because (z * u~)(m) = <z, S_m u>.

Cascading the smooth channel p times gives the multistage decomposition; the
same decomposition can be produced in one pass from equivalent filters built
by convolving the per-stage filters with upsampled successors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .orpt import build_basis


def circular_convolve(a, b) -> np.ndarray:
    """Circular convolution of two equal-length vectors."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 1 or a.shape != b.shape:
        raise ValueError(f"need two equal-length vectors, got shapes {a.shape} and {b.shape}")
    n = len(a)
    full = np.convolve(a, b)
    out = full[:n].copy()
    out[: n - 1] += full[n:]
    return out


def dft(a) -> np.ndarray:
    """Direct O(N^2) discrete Fourier transform.

    Only used to verify unitarity and reconstruction conditions, never in the
    transform paths, so the quadratic cost is irrelevant.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 1 or len(a) == 0:
        raise ValueError("dft needs a nonempty vector")
    grid = np.arange(len(a))
    return np.exp(-2j * np.pi * np.outer(grid, grid) / len(a)) @ a


def time_reverse(u) -> np.ndarray:
    """u~(n) = conj(u(-n mod N)), the synthesis partner of an analysis filter."""
    u = np.asarray(u)
    return np.conj(np.roll(u[::-1], 1))


def downsample(z, q: int, levels: int = 1) -> np.ndarray:
    z = np.asarray(z)
    factor = q**levels
    if factor < 1 or len(z) % factor != 0:
        raise ValueError(f"length {len(z)} is not a multiple of {q}^{levels}")
    return z[::factor].copy()


def upsample(x, q: int, levels: int = 1) -> np.ndarray:
    x = np.asarray(x)
    factor = q**levels
    if factor < 1:
        raise ValueError(f"bad upsampling factor {q}^{levels}")
    if factor == 1:
        return x.copy()
    out = np.zeros(len(x) * factor, dtype=x.dtype)
    out[::factor] = x
    return out


@dataclass(frozen=True)
class FilterBank:
    q: int
    n: int
    analysis: np.ndarray  # (q, n); row 0 is the smooth/average filter
    synthesis: np.ndarray  # (q, n); time-reversed conjugates of the analysis rows


def filters_from_rq(q: int, length: int) -> FilterBank:
    """Build the q-band bank for signals of the given length.

    Analysis filters are the unit-normalized length-q transform columns, zero
    padded: support is confined to the first q samples and row 0 is the
    constant 1/sqrt(q) averaging filter.
    """
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if length < q or length % q != 0:
        raise ValueError(f"length must be a positive multiple of q={q}, got {length}")
    basis = build_basis(q)
    analysis = np.zeros((q, length))
    analysis[:, :q] = (basis.matrix / np.sqrt(basis.sq_norms)).T
    synthesis = np.stack([time_reverse(u) for u in analysis])
    return FilterBank(q, length, analysis, synthesis)


def verify_unitary(bank: FilterBank, tol: float = 1e-9) -> tuple[bool, float]:
    """Check the polyphase unitarity conditions in the frequency domain.

    For every base frequency n the q x q matrix P(n) with entries
    u_j^(n + i*N/q)/sqrt(q) must be unitary; equivalently the aliased
    cross-power sums satisfy sum_i u_j^ conj(u_m^) = q*delta(j-m).
    Returns (pass, max deviation).
    """
    m = bank.n // bank.q
    spectra = np.stack([dft(u) for u in bank.analysis])  # (q filters, n)
    idx = (np.arange(m)[None, :] + m * np.arange(bank.q)[:, None]) % bank.n  # (q shifts, m)
    blocks = spectra[:, idx]  # (filter j, shift i, base frequency)
    gram = np.einsum("jin,kin->jkn", blocks, np.conj(blocks)) / bank.q
    eye = np.eye(bank.q)[:, :, None]
    deviation = float(np.abs(gram - eye).max())
    return deviation <= tol, deviation


def reconstruction_deviation(bank: FilterBank) -> float:
    """Max deviation of the reconstruction vector from (sqrt(q), 0, ..., 0).

    Perfect reconstruction requires P(n) applied to the synthesis spectra
    (conj(u_j^(n)) for the time-reversed bank) to produce sqrt(q) in the
    0-shift slot and zero in all aliased slots, for every n.
    """
    m = bank.n // bank.q
    u_hat = np.stack([dft(u) for u in bank.analysis])
    s_hat = np.stack([dft(s) for s in bank.synthesis])
    idx = (np.arange(bank.n)[None, :] + m * np.arange(bank.q)[:, None]) % bank.n
    vec = np.einsum("jin,jn->in", u_hat[:, idx], s_hat) / np.sqrt(bank.q)
    target = np.zeros((bank.q, bank.n), dtype=complex)
    target[0] = np.sqrt(bank.q)
    return float(np.abs(vec - target).max())


def stage_basis_matrix(bank: FilterBank) -> np.ndarray:
    """The N x N block orthonormal matrix with columns S_{q*k} u_j.

    Columns are grouped filter-major: the first N/q columns are the shifted
    smooth filter, then the shifted copies of each detail filter in turn.
    """
    m = bank.n // bank.q
    cols = [np.roll(u, bank.q * k) for u in bank.analysis for k in range(m)]
    return np.stack(cols, axis=1)


def analyze_stage(z, bank: FilterBank) -> tuple[np.ndarray, list[np.ndarray]]:
    """One filter bank stage: returns (smooth, [detail_2, ..., detail_q])."""
    z = np.asarray(z)
    if z.shape != (bank.n,):
        raise ValueError(f"signal length {z.shape} does not match bank length {bank.n}")
    outs = [downsample(circular_convolve(z, s), bank.q) for s in bank.synthesis]
    return outs[0], outs[1:]


def analyze_stage_matrix(z, bank: FilterBank) -> tuple[np.ndarray, list[np.ndarray]]:
    """Same stage computed as a row-vector product with the block matrix."""
    z = np.asarray(z)
    if z.shape != (bank.n,):
        raise ValueError(f"signal length {z.shape} does not match bank length {bank.n}")
    y = z @ stage_basis_matrix(bank)
    m = bank.n // bank.q
    return y[:m], [y[i * m : (i + 1) * m] for i in range(1, bank.q)]


def synthesize_stage(smooth, details, bank: FilterBank) -> np.ndarray:
    """Invert one stage: upsample each band and convolve with its filter."""
    smooth = np.asarray(smooth)
    if len(details) != bank.q - 1:
        raise ValueError(f"expected {bank.q - 1} detail bands, got {len(details)}")
    if len(smooth) * bank.q != bank.n:
        raise ValueError(f"band length {len(smooth)} does not match bank length {bank.n}")
    z = circular_convolve(upsample(smooth, bank.q), bank.analysis[0])
    for y, u in zip(details, bank.analysis[1:]):
        y = np.asarray(y)
        if len(y) != len(smooth):
            raise ValueError("inconsistent band lengths")
        z = z + circular_convolve(upsample(y, bank.q), u)
    return z


@dataclass(frozen=True)
class WaveletDecomposition:
    """p-stage decomposition: details[l-1][i-2] holds band i of stage l."""

    q: int
    stages: int
    length: int
    smooth: np.ndarray
    details: tuple[tuple[np.ndarray, ...], ...]


def analyze_multistage(z, q: int, stages: int) -> WaveletDecomposition:
    """Cascade the smooth channel through `stages` filter bank stages.

    Stage l runs the same q-band filters rebuilt at length N/q^(l-1), so the
    total output sample count stays N.
    """
    z = np.asarray(z, dtype=float)
    n = len(z)
    if stages < 1:
        raise ValueError(f"stages must be >= 1, got {stages}")
    if n % q**stages != 0:
        raise ValueError(f"length {n} is not a multiple of {q}^{stages}")
    details = []
    smooth = z
    for level in range(1, stages + 1):
        bank = filters_from_rq(q, n // q ** (level - 1))
        smooth, det = analyze_stage(smooth, bank)
        details.append(tuple(det))
    return WaveletDecomposition(q, stages, n, smooth, tuple(details))


def synthesize_multistage(dec: WaveletDecomposition) -> np.ndarray:
    """Invert the cascade from the deepest stage back up."""
    n, q = dec.length, dec.q
    if len(dec.smooth) != n // q**dec.stages:
        raise ValueError("inconsistent band lengths")
    x = np.asarray(dec.smooth, dtype=float)
    for level in range(dec.stages, 0, -1):
        bands = dec.details[level - 1]
        if any(len(y) != n // q**level for y in bands):
            raise ValueError("inconsistent band lengths")
        bank = filters_from_rq(q, n // q ** (level - 1))
        x = synthesize_stage(x, list(bands), bank)
    return x


@dataclass(frozen=True)
class EquivalentFilterBank:
    """Non-recursive (single-pass) filters equivalent to the cascade.

    smooth[l-1] is the length-N filter whose l-fold downsampled correlation
    with the input reproduces the stage-l smooth band; details[l-1][i-2]
    plays the same role for detail band i of stage l.
    """

    q: int
    n: int
    stages: int
    smooth: tuple[np.ndarray, ...]
    details: tuple[tuple[np.ndarray, ...], ...]


def equivalent_filters(q: int, length: int, stages: int) -> EquivalentFilterBank:
    """Build g^l = g^(l-1) * U^(l-1)(u_1^l) and f_i^l = g^(l-1) * U^(l-1)(u_i^l)."""
    if stages < 1:
        raise ValueError(f"stages must be >= 1, got {stages}")
    if length % q**stages != 0:
        raise ValueError(f"length {length} is not a multiple of {q}^{stages}")
    smooth: list[np.ndarray] = []
    details: list[tuple[np.ndarray, ...]] = []
    for level in range(1, stages + 1):
        bank = filters_from_rq(q, length // q ** (level - 1))
        lifted = [upsample(u, q, level - 1) for u in bank.analysis]
        if level == 1:
            g = lifted[0]
            f = tuple(lifted[1:])
        else:
            g = circular_convolve(smooth[-1], lifted[0])
            f = tuple(circular_convolve(smooth[-1], u) for u in lifted[1:])
        smooth.append(g)
        details.append(f)
    return EquivalentFilterBank(q, length, stages, tuple(smooth), tuple(details))


def analyze_nonrecursive(z, filters: EquivalentFilterBank) -> WaveletDecomposition:
    """Produce the full decomposition directly from the equivalent filters."""
    z = np.asarray(z, dtype=float)
    if z.shape != (filters.n,):
        raise ValueError(f"signal length {z.shape} does not match filter length {filters.n}")
    q, p = filters.q, filters.stages
    details = tuple(
        tuple(
            downsample(circular_convolve(z, time_reverse(f)), q, level)
            for f in filters.details[level - 1]
        )
        for level in range(1, p + 1)
    )
    smooth = downsample(circular_convolve(z, time_reverse(filters.smooth[p - 1])), q, p)
    return WaveletDecomposition(q, p, filters.n, smooth, details)


def synthesize_nonrecursive(dec: WaveletDecomposition, filters: EquivalentFilterBank) -> np.ndarray:
    """Single-pass reconstruction: upsample each band to full length first."""
    if dec.q != filters.q or dec.stages != filters.stages or dec.length != filters.n:
        raise ValueError("decomposition does not match the filter bank")
    q, p = filters.q, filters.stages
    z = circular_convolve(filters.smooth[p - 1], upsample(np.asarray(dec.smooth, float), q, p))
    for level in range(1, p + 1):
        for f, y in zip(filters.details[level - 1], dec.details[level - 1]):
            z = z + circular_convolve(f, upsample(np.asarray(y, float), q, level))
    return z


def modulation_identity_check(z, q: int, tol: float = 1e-9) -> bool:
    """Summing the q modulated copies of z keeps q*z on multiples of q and
    cancels everything else."""
    z = np.asarray(z)
    n = len(z)
    if n % q != 0:
        raise ValueError(f"length {n} is not a multiple of q={q}")
    grid = np.arange(n)
    lhs = sum(np.exp(-2j * np.pi * grid * k / q) * z for k in range(q))
    rhs = np.where(grid % q == 0, q * z.astype(complex), 0.0)
    return bool(np.abs(lhs - rhs).max() <= tol)


class BandSegment(NamedTuple):
    """Half-open slice [start, stop) of one band in the flattened layout."""

    stage: int
    band: int  # 1 marks the smooth band (only at the deepest stage)
    start: int
    stop: int


def band_segments(n: int, q: int, stages: int) -> list[BandSegment]:
    """Flattened band layout: smooth first, then details coarsest to finest."""
    if stages < 1 or n % q**stages != 0:
        raise ValueError(f"length {n} is not a multiple of {q}^{stages}")
    segments = [BandSegment(stages, 1, 0, n // q**stages)]
    pos = n // q**stages
    for level in range(stages, 0, -1):
        size = n // q**level
        for band in range(2, q + 1):
            segments.append(BandSegment(level, band, pos, pos + size))
            pos += size
    assert pos == n
    return segments


def flatten_decomposition(dec: WaveletDecomposition) -> np.ndarray:
    parts = [np.asarray(dec.smooth, dtype=float)]
    for level in range(dec.stages, 0, -1):
        parts.extend(np.asarray(y, dtype=float) for y in dec.details[level - 1])
    return np.concatenate(parts)


def unflatten_decomposition(vec, q: int, stages: int) -> WaveletDecomposition:
    vec = np.asarray(vec, dtype=float)
    n = len(vec)
    segments = band_segments(n, q, stages)
    smooth = vec[segments[0].start : segments[0].stop]
    details: list[list[np.ndarray]] = [[None] * (q - 1) for _ in range(stages)]
    for seg in segments[1:]:
        details[seg.stage - 1][seg.band - 2] = vec[seg.start : seg.stop]
    return WaveletDecomposition(q, stages, n, smooth, tuple(tuple(d) for d in details))
