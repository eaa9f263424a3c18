import dataclasses

import numpy as np
import pytest

from polyinscribe.config import PointConfig, make_pinwheel, random_interleaved_config
from polyinscribe.curves import JordanCurve, ellipse, unit_circle
from polyinscribe.errors import (
    DegenerateCrossRatio,
    InvalidCurve,
    NotInterleaved,
    ZeroPoint,
)
from polyinscribe.interp import build_transfer
from polyinscribe.solver import random_curve
from polyinscribe.symplectic import (
    Side,
    cross_ratio,
    cross_ratio_oracle,
    diagonal_forms,
    form_value,
    maslov_index_diagonal,
    power_matrix,
    pullback_residual,
    raw_form_coefficients,
    verify_lagrangian,
)


def test_power_matrix_square_pinwheel():
    V = power_matrix(make_pinwheel(2, np.pi / 2))
    want = np.array(
        [[-1, 1, -1], [1, 1, 1], [1j, 1, -1j], [-1j, 1, 1j]], dtype=complex
    )
    np.testing.assert_allclose(V, want, atol=1e-12)


def test_power_matrix_middle_column_ones():
    rng = np.random.default_rng(0)
    cfg = random_interleaved_config(4, rng)
    V = power_matrix(cfg)
    np.testing.assert_allclose(V[:, V.shape[1] // 2], np.ones(8), atol=1e-12)


def test_power_matrix_rejects_zero_point():
    cfg = PointConfig(alpha=np.array([0.0, 1.0]) + 0j, beta=np.array([2.0, 3.0]) + 0j)
    with pytest.raises(ZeroPoint):
        power_matrix(cfg)


def test_deleting_last_row_leaves_invertible_matrix():
    rng = np.random.default_rng(1)
    for _ in range(50):
        cfg = random_interleaved_config(int(rng.integers(2, 6)), rng)
        V = power_matrix(cfg)
        W = V[:-1]
        assert np.abs(np.linalg.det(W)) > 1e-12


def test_nullspace_is_one_dimensional():
    rng = np.random.default_rng(2)
    for _ in range(200):
        cfg = random_interleaved_config(int(rng.integers(2, 7)), rng)
        _, _, s = raw_form_coefficients(cfg)
        assert s[-1] / s[0] > 1e-6


def test_diagonal_forms_pinwheels_are_standard():
    rng = np.random.default_rng(3)
    for n in range(2, 7):
        theta = rng.uniform(0.1, 0.9) * 2 * np.pi / n
        forms = diagonal_forms(make_pinwheel(n, theta))
        np.testing.assert_allclose(forms.lambda_pos, 2 * np.ones(n), atol=1e-9)
        np.testing.assert_allclose(forms.mu_pos, 2 * np.ones(n), atol=1e-9)


def test_diagonal_forms_square_pinwheel():
    forms = diagonal_forms(make_pinwheel(2, np.pi / 2))
    np.testing.assert_allclose(forms.lambda_pos, [2, 2], atol=1e-12)
    np.testing.assert_allclose(forms.mu_pos, [2, 2], atol=1e-12)


def test_diagonal_forms_normalization_pins_mu_n():
    rng = np.random.default_rng(4)
    for _ in range(20):
        cfg = random_interleaved_config(int(rng.integers(2, 6)), rng)
        forms = diagonal_forms(cfg)
        assert forms.mu_pos[-1] == pytest.approx(2.0, abs=1e-12)
        assert abs(forms.mu_raw[-1] - 1j) < 1e-12


def test_raw_coefficients_span_left_nullspace():
    rng = np.random.default_rng(20)
    for _ in range(30):
        cfg = random_interleaved_config(int(rng.integers(2, 6)), rng)
        forms = diagonal_forms(cfg)
        u = np.concatenate([forms.lambda_raw, -forms.mu_raw])
        V = power_matrix(cfg)
        rel = np.linalg.norm(u @ V) / (np.linalg.norm(u) * np.linalg.norm(V))
        assert rel < 1e-8


def test_diagonal_forms_requires_interleaving():
    blocked = PointConfig(alpha=np.array([1, 1j]), beta=np.array([-1, -1j]))
    with pytest.raises(NotInterleaved):
        diagonal_forms(blocked)


def test_cross_ratio_values():
    assert cross_ratio(2, 0, 1, 3) == pytest.approx(-3.0)
    assert cross_ratio(1, -1, 1j, -1j) == pytest.approx(-1.0)


def test_cross_ratio_degenerate():
    with pytest.raises(DegenerateCrossRatio):
        cross_ratio(1.0, 2.0, 3.0, 1.0)
    with pytest.raises(DegenerateCrossRatio):
        cross_ratio(1.0, 2.0, 2.0, 5.0)


def test_oracle_square_pinwheel_all_ones():
    lam, mu = cross_ratio_oracle(make_pinwheel(2, np.pi / 2))
    np.testing.assert_allclose(lam, [1, 1], atol=1e-12)
    np.testing.assert_allclose(mu, [1, 1], atol=1e-12)


def test_oracle_matches_nullspace_ratios():
    rng = np.random.default_rng(5)
    for _ in range(100):
        cfg = random_interleaved_config(int(rng.integers(2, 6)), rng)
        forms = diagonal_forms(cfg)
        lam_o, mu_o = cross_ratio_oracle(cfg)
        lam_r = forms.lambda_pos / forms.mu_pos[-1]
        mu_r = forms.mu_pos / forms.mu_pos[-1]
        assert np.max(np.abs(lam_r - lam_o) / np.abs(lam_o)) < 1e-8
        assert np.max(np.abs(mu_r - mu_o) / np.abs(mu_o)) < 1e-8


def test_oracle_positivity_bulk():
    rng = np.random.default_rng(6)
    for _ in range(1000):
        cfg = random_interleaved_config(int(rng.integers(2, 7)), rng)
        lam, mu = cross_ratio_oracle(cfg)
        assert np.min(lam) > 0 and np.min(mu) > 0


def test_scale_invariance_under_rotation():
    rng = np.random.default_rng(7)
    for _ in range(20):
        cfg = random_interleaved_config(3, rng)
        phi = rng.uniform(0, 2 * np.pi)
        rotated = PointConfig(
            alpha=np.exp(1j * phi) * cfg.alpha, beta=np.exp(1j * phi) * cfg.beta
        )
        f0, f1 = diagonal_forms(cfg), diagonal_forms(rotated)
        r0 = np.concatenate([f0.lambda_pos, f0.mu_pos]) / f0.mu_pos[-1]
        r1 = np.concatenate([f1.lambda_pos, f1.mu_pos]) / f1.mu_pos[-1]
        assert np.max(np.abs(r0 - r1)) < 1e-9


def test_pullback_identity_random_frames():
    rng = np.random.default_rng(8)
    for _ in range(50):
        n = int(rng.integers(2, 6))
        cfg = random_interleaved_config(n, rng)
        forms = diagonal_forms(cfg)
        F = np.asarray(build_transfer(cfg).matrix)
        u = rng.normal(size=n) + 1j * rng.normal(size=n)
        v = rng.normal(size=n) + 1j * rng.normal(size=n)
        lhs = form_value(forms.mu_pos, F @ u, F @ v)
        rhs = form_value(forms.lambda_pos, u, v)
        assert abs(lhs - rhs) < 1e-8 * np.linalg.norm(u) * np.linalg.norm(v)


def test_pullback_matrix_residual():
    rng = np.random.default_rng(9)
    for _ in range(50):
        cfg = random_interleaved_config(int(rng.integers(2, 6)), rng)
        assert pullback_residual(diagonal_forms(cfg), build_transfer(cfg)) < 1e-8


def test_positivity_needs_interleaving():
    # A unit-circle configuration that is not interleaved must eventually
    # produce a sign flip; finding one certifies the hypothesis is doing work.
    rng = np.random.default_rng(10)
    found = False
    for _ in range(300):
        n = int(rng.integers(2, 5))
        z = np.exp(1j * np.sort(rng.uniform(0, 2 * np.pi, 2 * n)))
        perm = rng.permutation(2 * n)
        try:
            cfg = PointConfig(alpha=z[perm[:n]], beta=z[perm[n:]])
            from polyinscribe.config import check_interleaved_on_circle

            if check_interleaved_on_circle(cfg):
                continue
            lam_raw, mu_raw, _ = raw_form_coefficients(cfg)
            coeff = np.concatenate([(-2j * lam_raw).real, (-2j * mu_raw).real])
            imag = np.concatenate([(-2j * lam_raw).imag, (-2j * mu_raw).imag])
            if np.max(np.abs(imag)) < 1e-6 and np.min(coeff) < -1e-6:
                found = True
                break
        except Exception:
            continue
    assert found


def test_lagrangian_product_torus_exact():
    rng = np.random.default_rng(11)
    cfg = random_interleaved_config(3, rng)
    forms = diagonal_forms(cfg)
    T = build_transfer(cfg)
    curve = random_curve(rng)
    assert verify_lagrangian(forms, Side.ALPHA_SIDE, curve, T, 64) < 1e-12


def test_lagrangian_transferred_torus():
    rng = np.random.default_rng(12)
    for trial in range(10):
        n = int(rng.integers(2, 5))
        cfg = random_interleaved_config(n, rng)
        forms = diagonal_forms(cfg)
        T = build_transfer(cfg)
        curve = random_curve(rng)
        assert verify_lagrangian(forms, Side.BETA_SIDE, curve, T, 64, seed=trial) < 1e-9


def test_lagrangian_wrong_form_has_power():
    rng = np.random.default_rng(13)
    hits = 0
    for trial in range(10):
        n = int(rng.integers(2, 5))
        cfg = random_interleaved_config(n, rng)
        forms = diagonal_forms(cfg)
        T = build_transfer(cfg)
        curve = random_curve(rng)
        wrong = dataclasses.replace(forms, mu_pos=np.roll(forms.mu_pos, 1))
        if verify_lagrangian(wrong, Side.BETA_SIDE, curve, T, 64, seed=trial) > 1e-3:
            hits += 1
    assert hits >= 9


def test_maslov_values():
    assert maslov_index_diagonal(unit_circle(), 3) == 6
    assert maslov_index_diagonal(unit_circle(), 1) == 2
    assert maslov_index_diagonal(ellipse(), 2) == 4


def test_maslov_scales_linearly():
    rng = np.random.default_rng(14)
    for _ in range(5):
        curve = random_curve(rng)
        base = maslov_index_diagonal(curve, 1)
        for n in (2, 3, 5):
            assert maslov_index_diagonal(curve, n) == n * base


def test_maslov_rejects_invalid_curve():
    with pytest.raises(InvalidCurve):
        maslov_index_diagonal(JordanCurve({1: 1.0, 2: 0.8}, K=2), 2)
