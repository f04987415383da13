import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import R2, R3, R4, R6
from ramwave.number_theory import divisors, totient
from ramwave.orpt import (
    BasisLabel,
    OrptCoefficients,
    build_basis,
    detect_periods,
    divisor_labels,
    forward,
    inverse,
    period_energies,
)


def test_build_basis_golden_matrices():
    assert np.array_equal(build_basis(2).matrix, R2)
    assert np.array_equal(build_basis(3).matrix, R3)
    assert np.array_equal(build_basis(4).matrix, R4)
    assert np.array_equal(build_basis(6).matrix, R6)


def test_build_basis_rejects_zero():
    with pytest.raises(ValueError):
        build_basis(0)


def test_label_order_n12():
    # the 12-point expansion enumerates (divisor; j; k) in exactly this order
    expected = [
        (1, (), ()),
        (2, (0,), (0,)),
        (3, (0,), (0,)),
        (3, (0,), (1,)),
        (4, (0,), (0,)),
        (4, (1,), (0,)),
        (6, (0, 0), (0, 0)),
        (6, (0, 0), (0, 1)),
        (12, (0, 0), (0, 0)),
        (12, (1, 0), (0, 0)),
        (12, (0, 0), (0, 1)),
        (12, (1, 0), (0, 1)),
    ]
    assert [tuple(label) for label in build_basis(12).labels] == expected


def test_basis_block_sizes_and_dc_column():
    for n in (1, 2, 6, 12, 36, 60):
        basis = build_basis(n)
        assert basis.matrix.shape == (n, n)
        counts = {}
        for label in basis.labels:
            counts[label.divisor] = counts.get(label.divisor, 0) + 1
        assert counts == {d: totient(d) for d in divisors(n)}
        assert np.array_equal(basis.matrix[:, 0], np.ones(n, dtype=np.int64))
        assert basis.sq_norms[0] == n


def test_columns_pairwise_orthogonal_up_to_60():
    for n in range(1, 61):
        m = build_basis(n).matrix
        gram = m.T @ m
        off = gram - np.diag(np.diag(gram))
        assert np.abs(off).max() == 0


def test_sq_norm_closed_form():
    from ramwave.number_theory import factorize

    for n in (12, 36, 60):
        basis = build_basis(n)
        for label, sq in zip(basis.labels, basis.sq_norms):
            if label.divisor == 1:
                assert sq == n
                continue
            expected = n // label.divisor
            for (p, _), k in zip(factorize(label.divisor).factors, label.k):
                expected *= (p - k) * (p - k - 1)
            assert sq == expected


def test_forward_golden_2point():
    basis = build_basis(2)
    coeffs = forward([3, 1], basis)
    assert np.allclose(coeffs.beta, [2, 1])
    assert np.allclose(inverse(coeffs, basis), [3, 1])


def test_forward_dc_signal():
    basis = build_basis(6)
    coeffs = forward(np.ones(6), basis)
    assert coeffs.beta[0] == pytest.approx(1.0)
    assert np.abs(coeffs.beta[1:]).max() < 1e-12


def test_forward_period3_tile_projection_oracle():
    # x is the (d=3, k=1) column itself; check against literal R6 projections
    x = np.array([0.0, 1.0, -1.0, 0.0, 1.0, -1.0])
    expected = (R6.T @ x) / np.einsum("ij,ij->j", R6, R6)
    basis = build_basis(6)
    coeffs = forward(x, basis)
    assert np.allclose(coeffs.beta, expected, atol=1e-12)
    hot = [i for i, b in enumerate(coeffs.beta) if abs(b) > 1e-12]
    assert hot == [3]
    assert basis.labels[3] == BasisLabel(3, (0,), (1,))
    assert coeffs.beta[3] == pytest.approx(1.0)


def test_forward_rejects_length_mismatch():
    with pytest.raises(ValueError):
        forward([1, 2, 3], build_basis(4))
    with pytest.raises(ValueError):
        inverse(OrptCoefficients(3, np.zeros(3), build_basis(3).labels), build_basis(4))


def test_inverse_zero():
    basis = build_basis(6)
    assert np.array_equal(
        inverse(OrptCoefficients(6, np.zeros(6), basis.labels), basis), np.zeros(6)
    )


def test_round_trip_and_parseval():
    rng = np.random.default_rng(42)
    for n in (2, 3, 4, 6, 12, 36, 360):
        basis = build_basis(n)
        x = rng.standard_normal(n)
        for normalized in (False, True):
            coeffs = forward(x, basis, normalized=normalized)
            back = inverse(coeffs, basis)
            assert np.abs(back - x).max() / np.abs(x).max() < 1e-9
        beta = forward(x, basis, normalized=True).beta
        assert float(beta @ beta) == pytest.approx(float(x @ x), rel=1e-9)


def test_integer_closure():
    # integer signals produce rationals whose denominators divide the norms
    rng = np.random.default_rng(7)
    basis = build_basis(12)
    x = rng.integers(-9, 10, size=12)
    coeffs = forward(x.astype(float), basis)
    numerators = coeffs.beta * basis.sq_norms
    assert np.allclose(numerators, np.round(numerators), atol=1e-9)
    assert np.array_equal(np.round(numerators).astype(np.int64), basis.matrix.T @ x)


def test_period_energies_examples():
    basis6 = build_basis(6)
    x = np.tile([1.0, 2.0, 0.0], 2)
    energies = period_energies(x, basis6)
    assert energies[1] > 1e-3 and energies[3] > 1e-3
    assert energies[2] <= 1e-12 and energies[6] <= 1e-12
    assert sum(energies.values()) == pytest.approx(float(x @ x), rel=1e-9)

    constant = period_energies(np.full(6, 4.0), basis6)
    assert constant[1] == pytest.approx(96.0)
    assert all(constant[d] < 1e-12 for d in (2, 3, 6))

    basis4 = build_basis(4)
    alternating = period_energies(np.array([1.0, -1.0, 1.0, -1.0]), basis4)
    assert alternating[2] == pytest.approx(4.0)
    assert all(alternating[d] < 1e-12 for d in (1, 4))


def test_detect_periods_examples():
    basis6 = build_basis(6)
    divs, period = detect_periods(np.tile([1.0, 2.0, 0.0], 2), basis6)
    assert divs == [1, 3]
    assert period == 3

    divs, period = detect_periods(np.full(6, 3.0), basis6)
    assert divs == [1]
    assert period == 1

    divs, period = detect_periods(np.zeros(6), basis6)
    assert divs == []
    assert period == 1

    rng = np.random.default_rng(42)
    noise = rng.standard_normal(12)
    divs, period = detect_periods(noise, build_basis(12))
    assert divs == [1, 2, 3, 4, 6, 12]
    assert period == 12


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=48), st.integers(min_value=0, max_value=2**32 - 1))
def test_round_trip_property(n, seed):
    rng = np.random.default_rng(seed)
    basis = build_basis(n)
    x = rng.uniform(-5, 5, size=n)
    coeffs = forward(x, basis, normalized=True)
    assert np.abs(inverse(coeffs, basis) - x).max() < 1e-9
