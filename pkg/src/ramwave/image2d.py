"""Separable 2-D wavelet analysis for grayscale images.

The multistage 1-D decomposition is applied to every row and then to every
column of the row result.  Bands tile the coefficient plane as outer products
of the 1-D segments, with the smooth/smooth block in the top-left corner.
Because the 1-D map is orthonormal the 2-D map conserves energy, which is
what makes the sorted cumulative-energy curves comparable across band counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .filterbank import (
    BandSegment,
    analyze_multistage,
    band_segments,
    flatten_decomposition,
    synthesize_multistage,
    unflatten_decomposition,
)


@dataclass
class ImagePlane:
    """One grayscale plane; samples are floats, maxval the nominal peak."""

    samples: np.ndarray
    maxval: int = 255

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=float)
        if self.samples.ndim != 2:
            raise ValueError(f"image plane must be 2-D, got shape {self.samples.shape}")

    @property
    def height(self) -> int:
        return self.samples.shape[0]

    @property
    def width(self) -> int:
        return self.samples.shape[1]


@dataclass(frozen=True)
class BandLayout2D:
    """Band tiling of the coefficient plane.

    row_segments slice along the width axis (each row was transformed first),
    col_segments along the height axis.
    """

    q: int
    stages: int
    height: int
    width: int
    row_segments: tuple[BandSegment, ...] = field(repr=False)
    col_segments: tuple[BandSegment, ...] = field(repr=False)


def forward2d(img: ImagePlane, q: int, stages: int) -> tuple[np.ndarray, BandLayout2D]:
    """Rows first, then columns of the row result."""
    a = img.samples
    h, w = a.shape
    if h % q**stages or w % q**stages:
        raise ValueError(f"image {h}x{w} is not divisible by {q}^{stages} along both axes")
    rows = np.stack([flatten_decomposition(analyze_multistage(row, q, stages)) for row in a])
    coeffs = np.stack(
        [flatten_decomposition(analyze_multistage(col, q, stages)) for col in rows.T]
    ).T
    layout = BandLayout2D(
        q,
        stages,
        h,
        w,
        tuple(band_segments(w, q, stages)),
        tuple(band_segments(h, q, stages)),
    )
    return coeffs, layout


def inverse2d(coeffs, layout: BandLayout2D) -> ImagePlane:
    """Undo the column pass, then the row pass."""
    coeffs = np.asarray(coeffs, dtype=float)
    if coeffs.shape != (layout.height, layout.width):
        raise ValueError(
            f"coefficient plane {coeffs.shape} does not match layout "
            f"{(layout.height, layout.width)}"
        )
    q, p = layout.q, layout.stages
    cols = np.stack(
        [synthesize_multistage(unflatten_decomposition(col, q, p)) for col in coeffs.T]
    ).T
    rows = np.stack([synthesize_multistage(unflatten_decomposition(row, q, p)) for row in cols])
    return ImagePlane(rows)


def cumulative_energy(coeffs) -> np.ndarray:
    """Cumulative energy fraction of the coefficients, largest magnitude first.

    Entry m-1 is the fraction of total energy captured by the m largest
    squared coefficients; the curve is nondecreasing and ends at 1.
    """
    coeffs = np.asarray(coeffs, dtype=float)
    sq = np.sort(coeffs.ravel() ** 2)[::-1]
    total = sq.sum()
    if total == 0.0:
        raise ValueError("all-zero coefficient plane has no energy distribution")
    running = np.cumsum(sq)
    return running / running[-1]


def psnr(reference, reconstructed, maxval: int) -> float:
    """Peak signal-to-noise ratio in dB; infinity flags exact reconstruction."""
    reference = np.asarray(reference, dtype=float)
    reconstructed = np.asarray(reconstructed, dtype=float)
    mse = float(np.mean((reference - reconstructed) ** 2))
    if mse <= maxval**2 * 1e-20:
        return math.inf
    return 10.0 * math.log10(maxval**2 / mse)


def topk_reconstruct(img: ImagePlane, q: int, stages: int, keep: int) -> tuple[ImagePlane, float]:
    """Reconstruct from the `keep` largest-magnitude coefficients.

    Selection is by stable sort on descending magnitude, so the kept sets are
    nested as keep grows and the PSNR is nondecreasing in keep.
    """
    total = img.height * img.width
    if not 1 <= keep <= total:
        raise ValueError(f"keep must lie in [1, {total}], got {keep}")
    coeffs, layout = forward2d(img, q, stages)
    flat = coeffs.ravel()
    order = np.argsort(-np.abs(flat), kind="stable")
    kept = np.zeros_like(flat)
    kept[order[:keep]] = flat[order[:keep]]
    recon = inverse2d(kept.reshape(coeffs.shape), layout)
    recon.maxval = img.maxval
    return recon, psnr(img.samples, recon.samples, img.maxval)
