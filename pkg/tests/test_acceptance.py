"""Acceptance gate: the quantitative and property criteria, one test each.

Every test prints a single [Cnn] PASS/FAIL line with the measured values
(run pytest with -s to see them) and asserts the stated tolerance.  The
randomized criteria are fully seeded; the heavy solver criteria use two
worker threads, which does not affect the reported content.
"""

import dataclasses
import time

import numpy as np
import pytest

from polyinscribe.config import PointConfig, make_pinwheel, random_interleaved_config
from polyinscribe.curves import ellipse, unit_circle
from polyinscribe.interp import (
    build_transfer,
    build_transfer_pinwheel,
    cyclic_shift_matrix,
    imag_constraint_singular_values,
    real_intersection_dim,
)
from polyinscribe.solver import (
    SolveOptions,
    colinear_config,
    find_inscriptions,
    fit_cassini,
    plant_inscription,
    random_curve,
    residual_system,
    theorem_trial,
)
from polyinscribe.symplectic import (
    Side,
    cross_ratio_oracle,
    diagonal_forms,
    maslov_index_diagonal,
    pullback_residual,
    raw_form_coefficients,
    verify_lagrangian,
)

THREADS = 2


def _report(cid, ok, detail):
    print(f"\n[{cid}] {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, f"{cid} failed: {detail}"


def random_distinct_points(rng, n):
    while True:
        pts = rng.normal(size=n) + 1j * rng.normal(size=n)
        d = np.abs(pts[:, None] - pts[None, :])
        np.fill_diagonal(d, np.inf)
        if d.min() > 0.05:
            return pts


def test_c01_shift_identity():
    t0 = time.perf_counter()
    worst = 0.0
    for n in range(2, 8):
        F = build_transfer_pinwheel(n, 2 * np.pi / n).matrix
        worst = max(worst, float(np.max(np.abs(F - cyclic_shift_matrix(n)))))
    _report("C01", worst < 1e-10, f"shift identity n=2..7, worst {worst:.2e} < 1e-10, {time.perf_counter()-t0:.2f}s")


def test_c02_dft_conjugation_consistency():
    t0 = time.perf_counter()
    rng = np.random.default_rng(2)
    worst = 0.0
    for _ in range(50):
        n = int(rng.integers(2, 9))
        theta = rng.uniform(0.02, 0.98) * 2 * np.pi / n
        Fa = build_transfer(make_pinwheel(n, theta)).matrix
        Fb = build_transfer_pinwheel(n, theta).matrix
        worst = max(worst, float(np.max(np.abs(Fa - Fb))))
    _report("C02", worst < 1e-9, f"50 random theta, worst entrywise {worst:.2e} < 1e-9, {time.perf_counter()-t0:.2f}s")


def test_c03_ones_eigenvector():
    t0 = time.perf_counter()
    rng = np.random.default_rng(3)
    worst = 0.0
    for _ in range(200):
        n = int(rng.integers(2, 9))
        pts = random_distinct_points(rng, 2 * n)
        F = build_transfer(PointConfig(alpha=pts[:n], beta=pts[n:])).matrix
        worst = max(worst, float(np.max(np.abs(F @ np.ones(n) - np.ones(n)))))
    _report("C03", worst < 1e-9, f"200 random configs, worst |F1-1| {worst:.2e} < 1e-9, {time.perf_counter()-t0:.2f}s")


def test_c04_clean_intersection():
    t0 = time.perf_counter()
    rng = np.random.default_rng(4)
    all_one = True
    min_gap = np.inf
    for _ in range(100):
        cfg = random_interleaved_config(int(rng.integers(2, 7)), rng)
        T = build_transfer(cfg)
        if real_intersection_dim(T) != 1:
            all_one = False
        s = imag_constraint_singular_values(T)
        min_gap = min(min_gap, float(s[-2] / s[-1]))
    ok = all_one and min_gap >= 1e4
    _report("C04", ok, f"100 interleaved configs, dim==1 {all_one}, min gap {min_gap:.2e} >= 1e4, {time.perf_counter()-t0:.2f}s")


def test_c05_simultaneous_forms():
    t0 = time.perf_counter()
    rng = np.random.default_rng(5)
    worst_null = 0.0
    worst_imag = 0.0
    min_coeff = np.inf
    worst_oracle = 0.0
    worst_pull = 0.0
    for _ in range(1000):
        cfg = random_interleaved_config(int(rng.integers(2, 7)), rng)
        lam_raw, mu_raw, svals = raw_form_coefficients(cfg)
        worst_null = max(worst_null, float(svals[0] / svals[-1]))
        forms = diagonal_forms(cfg, verify_pullback=False)
        raw = np.concatenate([-2j * forms.lambda_raw, -2j * forms.mu_raw])
        # imaginary leak is measured against the coefficient scale
        worst_imag = max(worst_imag, float(np.max(np.abs(raw.imag)) / np.max(np.abs(raw))))
        min_coeff = min(min_coeff, float(np.min(np.concatenate([forms.lambda_pos, forms.mu_pos]))))
        lam_o, mu_o = cross_ratio_oracle(cfg)
        lam_r = forms.lambda_pos / forms.mu_pos[-1]
        mu_r = forms.mu_pos / forms.mu_pos[-1]
        worst_oracle = max(
            worst_oracle,
            float(np.max(np.abs(lam_r - lam_o) / np.abs(lam_o))),
            float(np.max(np.abs(mu_r - mu_o) / np.abs(mu_o))),
        )
        worst_pull = max(worst_pull, pullback_residual(forms, build_transfer(cfg)))
    ok = (
        worst_null < 1e6
        and worst_imag < 1e-9
        and min_coeff > 0
        and worst_oracle < 1e-8
        and worst_pull < 1e-8
    )
    _report(
        "C05",
        ok,
        f"1000 configs: nullspace cond {worst_null:.2e} < 1e6, imag leak {worst_imag:.2e} < 1e-9, "
        f"min coeff {min_coeff:.2e} > 0, oracle mismatch {worst_oracle:.2e} < 1e-8, "
        f"pullback {worst_pull:.2e} < 1e-8, {time.perf_counter()-t0:.1f}s",
    )


def test_c06_lagrangian_check():
    t0 = time.perf_counter()
    rng = np.random.default_rng(6)
    worst_alpha, worst_beta = 0.0, 0.0
    controls = 0
    for trial in range(50):
        n = int(rng.integers(2, 5))
        cfg = random_interleaved_config(n, rng)
        curve = random_curve(rng)
        forms = diagonal_forms(cfg)
        T = build_transfer(cfg)
        worst_alpha = max(worst_alpha, verify_lagrangian(forms, Side.ALPHA_SIDE, curve, T, 48, seed=trial))
        worst_beta = max(worst_beta, verify_lagrangian(forms, Side.BETA_SIDE, curve, T, 48, seed=trial))
        wrong = dataclasses.replace(forms, mu_pos=np.roll(forms.mu_pos, 1))
        if verify_lagrangian(wrong, Side.BETA_SIDE, curve, T, 48, seed=trial) > 1e-3:
            controls += 1
    ok = worst_alpha < 1e-9 and worst_beta < 1e-9 and controls >= 45
    _report(
        "C06",
        ok,
        f"50 triples: product torus {worst_alpha:.2e} < 1e-9, transferred {worst_beta:.2e} < 1e-9, "
        f"controls {controls}/50 >= 45, {time.perf_counter()-t0:.1f}s",
    )


def test_c07_maslov():
    t0 = time.perf_counter()
    rng = np.random.default_rng(7)
    ok = True
    for n in range(1, 6):
        ok &= maslov_index_diagonal(unit_circle(), n) == 2 * n
        ok &= maslov_index_diagonal(ellipse(), n) == 2 * n
    for _ in range(20):
        curve = random_curve(rng)
        n = int(rng.integers(1, 6))
        ok &= maslov_index_diagonal(curve, n) == 2 * n
    _report("C07", bool(ok), f"circle, ellipse, 20 random curves all equal 2n, {time.perf_counter()-t0:.1f}s")


def test_c08_quadratic_inscription_trials():
    t0 = time.perf_counter()
    found = 0
    misses = []
    for trial in range(50):
        tr = theorem_trial(1000 + trial, 2000 + trial, d=2, kind="concyclic",
                           n_starts=20000, threads=THREADS)
        if tr.found:
            found += 1
        else:
            misses.append(trial)
    _report(
        "C08",
        found >= 49,
        f"quadratic inscriptions of concyclic sextuples: {found}/50 found (misses {misses}), "
        f"{time.perf_counter()-t0:.0f}s",
    )


@pytest.mark.parametrize("n", [2, 3, 5])
def test_c09_pinwheel_trials(n):
    t0 = time.perf_counter()
    found = 0
    for trial in range(20):
        tr = theorem_trial(3000 + trial, 4000 + 100 * n + trial, d=n - 1, kind="pinwheel",
                           threads=THREADS)
        found += tr.found
    _report(
        f"C09[n={n}]",
        found >= 19,
        f"pinwheel inscriptions: {found}/20 found, {time.perf_counter()-t0:.0f}s",
    )


def test_c10_bezout_negative():
    t0 = time.perf_counter()
    rep = find_inscriptions(
        unit_circle(),
        colinear_config(3),
        SolveOptions(n_starts=50000, seed=10, threads=THREADS),
    )
    _report(
        "C10",
        len(rep.inscriptions) == 0,
        f"colinear sextuple into circle, 50000 starts: {len(rep.inscriptions)} nonconstant "
        f"(converged {rep.n_converged}, constants {rep.n_constant_discarded}), "
        f"{time.perf_counter()-t0:.0f}s",
    )


def test_c11_cassini_plant_and_recover():
    t0 = time.perf_counter()
    thetas = np.array([0.1, 1.0, 2.0, 3.0, 4.2, 5.5])
    rho2 = (0.5 * np.cos(2 * thetas) + np.sqrt(0.25 * np.cos(2 * thetas) ** 2 + 3.75)) / 2
    pts = np.sqrt(rho2) * np.exp(1j * thetas)
    fit = fit_cassini(pts)
    ok = (
        fit is not None
        and abs(fit.foci[0] + 0.5) < 1e-6
        and abs(fit.foci[1] - 0.5) < 1e-6
        and abs(fit.level - 1.0) < 1e-6
    )
    roots = fit_cassini(np.exp(2j * np.pi * np.arange(6) / 6))
    ok = ok and roots is not None and abs(roots.foci[0]) < 1e-6 and abs(roots.foci[1]) < 1e-6
    detail = "planted foci +-0.5 level 1 recovered to 1e-6; sixth roots give foci (0,0)"
    _report("C11", bool(ok), f"{detail}, {time.perf_counter()-t0:.1f}s")


def test_c12_plant_and_recover_soundness():
    t0 = time.perf_counter()
    recovered = 0
    worst = 0.0
    for seed in range(50):
        poly, cfg, curve = plant_inscription(seed, d=2)
        rep = find_inscriptions(curve, cfg, SolveOptions(n_starts=6000, seed=seed, threads=THREADS))
        dists = [np.max(np.abs(i.poly.coeffs - poly.coeffs)) for i in rep.inscriptions]
        best = min(dists) if dists else np.inf
        worst = max(worst, best)
        recovered += best < 1e-6
    _report(
        "C12",
        recovered == 50,
        f"50 planted inscriptions recovered: {recovered}/50, worst coefficient distance {worst:.2e} < 1e-6, "
        f"{time.perf_counter()-t0:.0f}s",
    )


def test_c13_residual_system_properties():
    t0 = time.perf_counter()
    rng = np.random.default_rng(13)
    h = 1e-6

    worst_fd = 0.0
    from polyinscribe.solver import _value_batch

    for _ in range(100):
        curve = random_curve(rng)
        n = int(rng.integers(2, 5))
        cfg = random_interleaved_config(n, rng)
        t = rng.uniform(0, 2 * np.pi, n)
        s = rng.uniform(0, 2 * np.pi, n)
        _, jac = residual_system(curve, cfg, t, s)
        F = build_transfer(cfg).matrix
        x = np.concatenate([t, s])
        fd = np.zeros((2 * n, 2 * n))
        for j in range(2 * n):
            xp, xm = x.copy(), x.copy()
            xp[j] += h
            xm[j] -= h
            vp = _value_batch(F, curve, xp[None, :])[0]
            vm = _value_batch(F, curve, xm[None, :])[0]
            fd[:, j] = np.concatenate([(vp - vm).real, (vp - vm).imag]) / (2 * h)
        worst_fd = max(worst_fd, float(np.max(np.abs(jac - fd))))

    worst_diag = 0.0
    worst_null = 0.0
    for _ in range(25):
        curve = random_curve(rng)
        n = int(rng.integers(2, 5))
        cfg = random_interleaved_config(n, rng)
        tau = rng.uniform(0, 2 * np.pi)
        val, jac = residual_system(curve, cfg, [tau] * n, [tau] * n)
        worst_diag = max(worst_diag, float(np.max(np.abs(val))))
        worst_null = max(worst_null, float(np.linalg.svd(jac, compute_uv=False)[-1]))

    ok = worst_fd < 1e-5 and worst_diag < 1e-12 and worst_null < 1e-7
    _report(
        "C13",
        ok,
        f"jacobian vs FD {worst_fd:.2e} < 1e-5; diagonal residual {worst_diag:.2e}; "
        f"diagonal null sv {worst_null:.2e} < 1e-7, {time.perf_counter()-t0:.0f}s",
    )


def test_c14_determinism_of_solver_criteria():
    t0 = time.perf_counter()
    ok = True

    for trial in (0, 17, 42):
        a = theorem_trial(1000 + trial, 2000 + trial, d=2, kind="concyclic",
                          n_starts=20000, threads=THREADS)
        b = theorem_trial(1000 + trial, 2000 + trial, d=2, kind="concyclic",
                          n_starts=20000, threads=THREADS)
        ok &= a.report.canonical_dict() == b.report.canonical_dict()

    for n in (2, 3, 5):
        a = theorem_trial(3000, 4000 + 100 * n, d=n - 1, kind="pinwheel", threads=THREADS)
        b = theorem_trial(3000, 4000 + 100 * n, d=n - 1, kind="pinwheel", threads=THREADS)
        ok &= a.report.canonical_dict() == b.report.canonical_dict()

    opts = SolveOptions(n_starts=50000, seed=10, threads=THREADS)
    a = find_inscriptions(unit_circle(), colinear_config(3), opts)
    b = find_inscriptions(unit_circle(), colinear_config(3), opts)
    ok &= a.canonical_dict() == b.canonical_dict()

    _report("C14", bool(ok), f"repeated seeded runs of criteria 8-10 bit-identical, {time.perf_counter()-t0:.0f}s")
