"""Command line front end.

Exit codes: 0 success, 2 usage error, 3 malformed input file, 4 numerical
verification failure.
"""

from __future__ import annotations

import argparse
import csv
import sys

import numpy as np

from .filterbank import (
    analyze_multistage,
    analyze_nonrecursive,
    analyze_stage,
    band_segments,
    equivalent_filters,
    filters_from_rq,
    flatten_decomposition,
    reconstruction_deviation,
    synthesize_multistage,
    synthesize_nonrecursive,
    synthesize_stage,
    unflatten_decomposition,
    verify_unitary,
)
from .fileio import FormatError, read_csv, read_pgm, read_signal, write_csv, write_pgm, write_signal
from .image2d import BandLayout2D, ImagePlane, cumulative_energy, forward2d, inverse2d, psnr
from .orpt import OrptCoefficients, build_basis, detect_periods, divisor_labels, forward, inverse
from .ors import ors_divisor

TOLERANCE = 1e-9


def _tuple_text(values) -> str:
    return ";".join(str(v) for v in values)


def _stdout_csv():
    return csv.writer(sys.stdout, lineterminator="\n")


def cmd_ors_gen(args) -> int:
    q = args.q
    length = args.N if args.N is not None else q
    labels = divisor_labels(q)
    if not 0 <= args.k < len(labels):
        raise ValueError(f"k selects one of the phi({q}) = {len(labels)} sequences, got {args.k}")
    label = labels[args.k]
    if q == 1:
        if length < 1:
            raise ValueError(f"N must be positive, got {length}")
        samples = np.ones(length, dtype=np.int64)
        sq_norm = length
    else:
        vec = ors_divisor(q, label.k, label.j, length)
        samples, sq_norm = vec.samples, vec.sq_norm
    writer = _stdout_csv()
    writer.writerow(["divisor", "j", "k", "sq_norm"] + [f"s{i}" for i in range(length)])
    writer.writerow(
        [label.divisor, _tuple_text(label.j), _tuple_text(label.k), sq_norm] + list(samples)
    )
    return 0


def cmd_orpt_build(args) -> int:
    basis = build_basis(args.N)
    header = ["divisor", "j", "k", "sq_norm"] + [f"s{i}" for i in range(args.N)]
    rows = [
        [label.divisor, _tuple_text(label.j), _tuple_text(label.k), int(basis.sq_norms[c])]
        + list(basis.matrix[:, c])
        for c, label in enumerate(basis.labels)
    ]
    write_csv(args.out, header, rows)
    return 0


def cmd_orpt_forward(args) -> int:
    x = read_signal(args.infile)
    if len(x) != args.N:
        raise ValueError(f"signal has {len(x)} samples, expected N={args.N}")
    basis = build_basis(args.N)
    coeffs = forward(x, basis, normalized=args.normalized)
    rows = [
        [label.divisor, _tuple_text(label.j), _tuple_text(label.k), float(b)]
        for label, b in zip(coeffs.labels, coeffs.beta)
    ]
    write_csv(args.out, ["divisor", "j", "k", "beta"], rows)
    return 0


def cmd_orpt_inverse(args) -> int:
    header, records = read_csv(args.infile)
    if "beta" not in header:
        raise FormatError("csv", f"no beta column in {args.infile}")
    col = header.index("beta")
    if len(records) != args.N:
        raise FormatError("csv", f"expected {args.N} coefficient rows, got {len(records)}")
    try:
        beta = np.array([float(r[col]) for r in records])
    except (ValueError, IndexError):
        raise FormatError("csv", f"malformed coefficient rows in {args.infile}") from None
    basis = build_basis(args.N)
    coeffs = OrptCoefficients(args.N, beta, basis.labels, normalized=args.normalized)
    write_signal(inverse(coeffs, basis), args.out)
    return 0


def cmd_period_detect(args) -> int:
    x = read_signal(args.infile)
    basis = build_basis(len(x))
    detected, period = detect_periods(x, basis, threshold=args.threshold)
    print("divisors:" + "".join(f" {d}" for d in detected))
    print(f"period: {period}")
    return 0


def _band_rows(vec, q: int, stages: int):
    for seg in band_segments(len(vec), q, stages):
        for index, value in enumerate(vec[seg.start : seg.stop]):
            yield [seg.stage, seg.band, index, float(value)]


def cmd_dwt_analyze(args) -> int:
    z = read_signal(args.infile)
    if args.nonrecursive:
        dec = analyze_nonrecursive(z, equivalent_filters(args.q, len(z), args.stages))
    else:
        dec = analyze_multistage(z, args.q, args.stages)
    vec = flatten_decomposition(dec)
    write_csv(args.out, ["stage", "band", "index", "value"], _band_rows(vec, args.q, args.stages))
    return 0


def cmd_dwt_synthesize(args) -> int:
    header, records = read_csv(args.infile)
    if header[:4] != ["stage", "band", "index", "value"]:
        raise FormatError("csv", f"unexpected band file header {header}")
    n = len(records)
    segments = {(s.stage, s.band): s for s in band_segments(n, args.q, args.stages)}
    vec = np.full(n, np.nan)
    for record in records:
        try:
            stage, band, index, value = int(record[0]), int(record[1]), int(record[2]), float(record[3])
        except (ValueError, IndexError):
            raise FormatError("csv", f"malformed band row {record}") from None
        seg = segments.get((stage, band))
        if seg is None or not 0 <= index < seg.stop - seg.start:
            raise FormatError("csv", f"band row {record} does not fit the {args.q}-band layout")
        vec[seg.start + index] = value
    if np.isnan(vec).any():
        raise FormatError("csv", "band file does not cover every coefficient")
    dec = unflatten_decomposition(vec, args.q, args.stages)
    if args.nonrecursive:
        z = synthesize_nonrecursive(dec, equivalent_filters(args.q, n, args.stages))
    else:
        z = synthesize_multistage(dec)
    write_signal(z, args.out)
    return 0


def cmd_image_forward(args) -> int:
    img = read_pgm(args.infile)
    coeffs, _ = forward2d(img, args.q, args.stages)
    write_csv(args.coeffs, [f"c{i}" for i in range(img.width)], coeffs.tolist())
    write_pgm(ImagePlane(coeffs), args.out)
    return 0


def cmd_image_inverse(args) -> int:
    header, records = read_csv(args.coeffs)
    width, height = len(header), len(records)
    try:
        coeffs = np.array([[float(v) for v in record] for record in records])
    except ValueError:
        raise FormatError("csv", f"malformed coefficient rows in {args.coeffs}") from None
    if coeffs.size and coeffs.shape != (height, width):
        raise FormatError("csv", f"ragged coefficient rows in {args.coeffs}")
    layout = BandLayout2D(
        args.q,
        args.stages,
        height,
        width,
        tuple(band_segments(width, args.q, args.stages)),
        tuple(band_segments(height, args.q, args.stages)),
    )
    recon = inverse2d(coeffs, layout)
    write_pgm(recon, args.out)
    if args.infile is not None:
        reference = read_pgm(args.infile)
        print(f"psnr: {psnr(reference.samples, recon.samples, reference.maxval):.6g}")
    return 0


def cmd_image_energy(args) -> int:
    img = read_pgm(args.infile)
    try:
        q_list = [int(tok) for tok in args.q_list.split(",") if tok]
    except ValueError:
        raise ValueError(f"bad --q-list {args.q_list!r}") from None
    if not q_list or any(q < 2 for q in q_list):
        raise ValueError(f"--q-list needs comma-separated integers >= 2, got {args.q_list!r}")
    columns = [cumulative_energy(img.samples)]
    for q in q_list:
        coeffs, _ = forward2d(img, q, 1)
        columns.append(cumulative_energy(coeffs))
    header = ["identity"] + [f"R{q}" for q in q_list]
    write_csv(args.out, header, zip(*columns))
    return 0


def cmd_verify(args) -> int:
    bank = filters_from_rq(args.q, args.N)
    if args.corrupt:
        bank.analysis[1, 0] += 1e-3
    ok_unitary, dev_unitary = verify_unitary(bank, tol=TOLERANCE)
    dev_recon = reconstruction_deviation(bank)
    rng = np.random.default_rng(args.seed)
    dev_trip = 0.0
    for _ in range(10):
        z = rng.standard_normal(args.N)
        smooth, details = analyze_stage(z, bank)
        back = synthesize_stage(smooth, details, bank)
        dev_trip = max(dev_trip, float(np.abs(back - z).max()))
    checks = [
        ("unitarity", dev_unitary, ok_unitary),
        ("reconstruction vector", dev_recon, dev_recon <= TOLERANCE),
        ("round trip", dev_trip, dev_trip <= TOLERANCE),
    ]
    failed = False
    for name, deviation, ok in checks:
        print(f"{name}: max deviation {deviation:.3e} [{'pass' if ok else 'FAIL'}]")
        failed = failed or not ok
    return 4 if failed else 0


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramwave",
        description="Orthogonal Ramanujan sequences, the periodic transform, and q-band wavelets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ors = sub.add_parser("ors", help="orthogonal Ramanujan sequences")
    ors_sub = p_ors.add_subparsers(dest="subcommand", required=True)
    p = ors_sub.add_parser("gen", help="print one sequence as CSV")
    p.add_argument("--q", type=_positive, required=True, help="period")
    p.add_argument("--k", type=_nonnegative, default=0, help="sequence index, 0..phi(q)-1")
    p.add_argument("--N", type=_positive, default=None, help="ambient length (default q)")
    p.set_defaults(func=cmd_ors_gen)

    p_orpt = sub.add_parser("orpt", help="orthogonal periodic transform")
    orpt_sub = p_orpt.add_subparsers(dest="subcommand", required=True)
    p = orpt_sub.add_parser("build", help="write the N x N basis matrix with labels")
    p.add_argument("--N", type=_positive, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_orpt_build)
    p = orpt_sub.add_parser("forward", help="project a signal onto the basis")
    p.add_argument("--N", type=_positive, required=True)
    p.add_argument("--in", dest="infile", required=True, help="signal file")
    p.add_argument("--out", required=True, help="coefficient CSV")
    p.add_argument("--normalized", action="store_true", help="orthonormal scaling")
    p.set_defaults(func=cmd_orpt_forward)
    p = orpt_sub.add_parser("inverse", help="rebuild a signal from coefficients")
    p.add_argument("--N", type=_positive, required=True)
    p.add_argument("--in", dest="infile", required=True, help="coefficient CSV")
    p.add_argument("--out", required=True, help="signal file")
    p.add_argument("--normalized", action="store_true", help="orthonormal scaling")
    p.set_defaults(func=cmd_orpt_inverse)

    p_period = sub.add_parser("period", help="hidden period detection")
    period_sub = p_period.add_subparsers(dest="subcommand", required=True)
    p = period_sub.add_parser("detect", help="report divisors carrying energy")
    p.add_argument("--in", dest="infile", required=True, help="signal file")
    p.add_argument("--threshold", type=float, default=1e-6, help="relative energy threshold")
    p.set_defaults(func=cmd_period_detect)

    p_dwt = sub.add_parser("dwt", help="q-band wavelet transform")
    dwt_sub = p_dwt.add_subparsers(dest="subcommand", required=True)
    for name, func, in_help, out_help in (
        ("analyze", cmd_dwt_analyze, "signal file", "band CSV"),
        ("synthesize", cmd_dwt_synthesize, "band CSV", "signal file"),
    ):
        p = dwt_sub.add_parser(name, help=f"{name} a signal")
        p.add_argument("--q", type=_positive, required=True, help="number of bands")
        p.add_argument("--stages", type=_positive, required=True)
        p.add_argument("--in", dest="infile", required=True, help=in_help)
        p.add_argument("--out", required=True, help=out_help)
        p.add_argument(
            "--nonrecursive",
            action="store_true",
            help="use the single-pass equivalent filters",
        )
        p.set_defaults(func=func)

    p_image = sub.add_parser("image", help="2-D transforms on PGM images")
    image_sub = p_image.add_subparsers(dest="subcommand", required=True)
    p = image_sub.add_parser("forward", help="decompose an image")
    p.add_argument("--q", type=_positive, required=True)
    p.add_argument("--stages", type=_positive, required=True)
    p.add_argument("--in", dest="infile", required=True, help="input PGM")
    p.add_argument("--out", required=True, help="coefficient plane as PGM (clamped)")
    p.add_argument("--coeffs", required=True, help="coefficient plane as CSV (exact)")
    p.set_defaults(func=cmd_image_forward)
    p = image_sub.add_parser("inverse", help="rebuild an image from coefficients")
    p.add_argument("--q", type=_positive, required=True)
    p.add_argument("--stages", type=_positive, required=True)
    p.add_argument("--in", dest="infile", default=None, help="reference PGM for a PSNR report")
    p.add_argument("--out", required=True, help="reconstructed PGM")
    p.add_argument("--coeffs", required=True, help="coefficient plane CSV")
    p.set_defaults(func=cmd_image_inverse)
    p = image_sub.add_parser("energy", help="cumulative energy curves per q")
    p.add_argument("--in", dest="infile", required=True, help="input PGM")
    p.add_argument("--q-list", dest="q_list", required=True, help="comma-separated band counts")
    p.add_argument("--out", required=True, help="energy CSV (identity column first)")
    p.set_defaults(func=cmd_image_energy)

    p = sub.add_parser("verify", help="filter bank unitarity and reconstruction checks")
    p.add_argument("--q", type=_positive, required=True)
    p.add_argument("--N", type=_positive, required=True)
    p.add_argument("--seed", type=_nonnegative, default=42, help="seed for the round-trip signals")
    p.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
