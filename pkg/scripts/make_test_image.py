#!/usr/bin/env python3
"""Regenerate data/synthetic_120.pgm, the bundled energy-compaction test image.

The content is deterministic: a smooth diagonal gradient carrying most of the
energy, plus a bright rectangle, a dark disk and a mid-gray square that add
edges at several orientations.  120 = 2^3 * 3 * 5, so the image is divisible
by every band count used in the experiments.
"""

import argparse
from pathlib import Path

import numpy as np

from ramwave.fileio import write_pgm
from ramwave.image2d import ImagePlane

SIDE = 120


def synthetic_image(side: int = SIDE) -> np.ndarray:
    y, x = np.mgrid[0:side, 0:side].astype(float)
    img = 40.0 + 150.0 * (x + y) / (2 * side - 2)
    img[18:48, 66:108] = 225.0
    disk = (y - 82.0) ** 2 + (x - 38.0) ** 2 <= 19.0**2
    img[disk] = 25.0
    img[84:108, 78:96] = 170.0
    return np.clip(img, 0.0, 255.0)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--out",
        default=str(Path(__file__).resolve().parent.parent / "data" / "synthetic_120.pgm"),
    )
    args = parser.parse_args()
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    write_pgm(ImagePlane(synthetic_image()), args.out)
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
