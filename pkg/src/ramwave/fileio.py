"""File formats: PGM images (P2/P5), plain-text signals, RFC-4180 CSV."""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .image2d import ImagePlane


class FormatError(ValueError):
    """Malformed input file; `code` names the failure class."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class PgmError(FormatError):
    pass


def _next_token(data: bytes, pos: int):
    """Next header token after whitespace and # comments; None at end."""
    n = len(data)
    while pos < n:
        c = data[pos : pos + 1]
        if c == b"#":
            while pos < n and data[pos : pos + 1] not in (b"\n", b"\r"):
                pos += 1
        elif c.isspace():
            pos += 1
        else:
            break
    if pos >= n:
        return None, pos
    start = pos
    while pos < n and not data[pos : pos + 1].isspace() and data[pos : pos + 1] != b"#":
        pos += 1
    return data[start:pos], pos


def _int_token(data: bytes, pos: int, what: str) -> tuple[int, int]:
    token, pos = _next_token(data, pos)
    if token is None:
        raise PgmError("header", f"unexpected end of file while reading {what}")
    try:
        value = int(token)
    except ValueError:
        raise PgmError("header", f"bad {what} token {token!r}") from None
    return value, pos


def read_pgm(path) -> ImagePlane:
    """Read an 8-bit PGM image, ASCII (P2) or binary (P5)."""
    data = Path(path).read_bytes()
    magic, pos = _next_token(data, 0)
    if magic not in (b"P2", b"P5"):
        raise PgmError("header", f"not a PGM file (magic {magic!r})")
    width, pos = _int_token(data, pos, "width")
    height, pos = _int_token(data, pos, "height")
    maxval, pos = _int_token(data, pos, "maxval")
    if width < 1 or height < 1:
        raise PgmError("header", f"bad dimensions {width}x{height}")
    if maxval < 1:
        raise PgmError("header", f"bad maxval {maxval}")
    if maxval > 255:
        raise PgmError("maxval", f"unsupported maxval {maxval} (only 8-bit images)")
    count = width * height
    if magic == b"P5":
        # exactly one whitespace byte separates the header from the payload
        if pos >= len(data) or not data[pos : pos + 1].isspace():
            raise PgmError("header", "missing whitespace after maxval")
        payload = data[pos + 1 : pos + 1 + count]
        if len(payload) < count:
            raise PgmError("truncated", f"expected {count} pixel bytes, got {len(payload)}")
        pixels = np.frombuffer(payload, dtype=np.uint8).astype(float)
    else:
        values = []
        for _ in range(count):
            token, pos = _next_token(data, pos)
            if token is None:
                raise PgmError("truncated", f"expected {count} pixels, got {len(values)}")
            try:
                values.append(int(token))
            except ValueError:
                raise PgmError("pixel", f"bad pixel token {token!r}") from None
        pixels = np.array(values, dtype=float)
    if pixels.max() > maxval:
        raise PgmError("pixel", f"pixel value {int(pixels.max())} exceeds maxval {maxval}")
    return ImagePlane(pixels.reshape(height, width), maxval)


def write_pgm(img: ImagePlane, path) -> None:
    """Write binary P5 with maxval 255; samples are clamped, then rounded
    half away from zero."""
    clamped = np.clip(img.samples, 0, 255)
    quantized = np.floor(clamped + 0.5).astype(np.uint8)
    header = b"P5\n%d %d\n255\n" % (img.width, img.height)
    Path(path).write_bytes(header + quantized.tobytes())


def read_signal(path) -> np.ndarray:
    """Whitespace-separated decimal samples, at least one."""
    tokens = Path(path).read_text().split()
    if not tokens:
        raise FormatError("signal", f"no samples in {path}")
    try:
        return np.array([float(t) for t in tokens])
    except ValueError as exc:
        raise FormatError("signal", f"bad sample in {path}: {exc}") from None


def write_signal(x, path) -> None:
    Path(path).write_text("".join(f"{format_value(v)}\n" for v in np.asarray(x).ravel()))


def format_value(v) -> str:
    """CSV cell text: integers verbatim, floats with 12 significant digits."""
    if isinstance(v, (bool, np.bool_)):
        return str(v)
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.12g}"
    return str(v)


def write_csv(path, header, rows) -> None:
    """RFC-4180-style CSV with a header row; rows must be rectangular."""
    header = [str(h) for h in header]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            row = list(row)
            if len(row) != len(header):
                raise ValueError(
                    f"row of width {len(row)} under a header of width {len(header)}"
                )
            writer.writerow([format_value(v) for v in row])


def read_csv(path) -> tuple[list[str], list[list[str]]]:
    with open(path, newline="") as fh:
        records = [row for row in csv.reader(fh) if row]
    if not records:
        raise FormatError("csv", f"empty CSV file {path}")
    return records[0], records[1:]
