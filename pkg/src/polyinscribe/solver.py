"""Multistart Newton search for polynomial inscriptions.

A degree <= n-1 polynomial p inscribes the 2n points {alpha, beta} into a
curve gamma exactly when the value vectors (p(alpha_k)) and (p(beta_k)) both
lie on the product torus gamma^n, i.e. when F(gamma(t)) = gamma(s) for the
transfer map F and some parameter vectors t, s.  The solver runs damped
Newton on that square real system from low-discrepancy starting points,
converts converged parameters back to polynomials by interpolation, discards
the constant family, and re-verifies every survivor by direct evaluation
against the curve.  Soundness of reported inscriptions is unconditional;
completeness is best-effort and scales with the number of starts.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import least_squares
from scipy.stats import qmc

from .config import PointConfig, make_pinwheel
from .curves import (
    DEFAULT_SAMPLES,
    JordanCurve,
    curve_through_points,
    derivative,
    evaluate,
    unit_circle,
    validate,
)
from .errors import CurveGenerationFailed, DegenerateInput, InvalidCurve
from .interp import Polynomial, build_transfer, vandermonde

RESIDUAL_TOL = 1e-8
DEDUP_TOL = 1e-6
STEP_TOL = 1e-12
DEGENERACY_REL_TOL = 1e-7


def expected_dimension(d: int, k: int) -> int:
    """Expected dimension of the space of nonconstant degree-d inscriptions
    of k points.

    Each point beyond the d+1 freely-placeable ones cuts the dimension by
    one, giving 2(d+1) - k; the count is zero exactly at k = 2(d+1).  For
    k < d+1 the space is a full (d+1)-torus and d+1 is returned.
    """
    d, k = int(d), int(k)
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if k < d + 1:
        return d + 1
    return 2 * (d + 1) - k


@dataclass(frozen=True)
class Inscription:
    """One verified inscription: the polynomial plus its torus parameters."""

    poly: Polynomial
    t_params: np.ndarray
    s_params: np.ndarray
    residual: float
    constant: bool
    degenerate: bool = False

    def to_dict(self) -> dict:
        return {
            "coeffs": self.poly.to_list(),
            "t_params": [float(v) for v in self.t_params],
            "s_params": [float(v) for v in self.s_params],
            "residual": float(self.residual),
            "constant": self.constant,
            "degenerate": self.degenerate,
        }


@dataclass
class SolveReport:
    """Outcome of one multistart search (nonconstant inscriptions only)."""

    inscriptions: List[Inscription]
    n_starts: int
    n_converged: int
    n_constant_discarded: int
    wall_time_s: float
    truncated: bool = False

    def to_dict(self, include_wall_time: bool = True) -> dict:
        out = {
            "inscriptions": [i.to_dict() for i in self.inscriptions],
            "n_starts": self.n_starts,
            "n_converged": self.n_converged,
            "n_constant_discarded": self.n_constant_discarded,
            "truncated": self.truncated,
        }
        if include_wall_time:
            out["wall_time_s"] = float(self.wall_time_s)
        return out

    def canonical_dict(self) -> dict:
        """Deterministic content: everything except the wall-clock time."""
        return self.to_dict(include_wall_time=False)


@dataclass(frozen=True)
class SolveOptions:
    n_starts: Optional[int] = None  # default 2000 * n
    seed: int = 0
    max_iter: int = 50
    step_tol: float = STEP_TOL
    residual_tol: float = RESIDUAL_TOL
    dedup_tol: float = DEDUP_TOL
    chunk_size: int = 8192
    threads: int = 1
    time_budget_s: Optional[float] = None


def residual_system(
    curve: JordanCurve, config: PointConfig, t: Sequence[float], s: Sequence[float]
) -> Tuple[np.ndarray, np.ndarray]:
    """Value and real Jacobian of G(t, s) = F(gamma(t)) - gamma(s).

    The value is a complex n-vector; the Jacobian is the real 2n x 2n matrix
    of (Re G, Im G) with respect to (t, s).  Vanishes identically when t = s
    is constant: the diagonal family of constant inscriptions.
    """
    F = build_transfer(config).matrix
    t = np.atleast_1d(np.asarray(t, dtype=float))
    s = np.atleast_1d(np.asarray(s, dtype=float))
    value, jac = _system_batch(F, curve, t[None, :], s[None, :])
    return value[0], jac[0]


def _system_batch(F, curve, t, s):
    """Batched value and Jacobian; t, s have shape (m, n)."""
    gt = evaluate(curve, t)
    gs = evaluate(curve, s)
    value = gt @ F.T - gs

    dgt = derivative(curve, t)
    dgs = derivative(curve, s)
    m, n = t.shape
    jt = F[None, :, :] * dgt[:, None, :]  # column j of dG/dt_j = F e_j * gamma'(t_j)
    js = np.zeros((m, n, n), dtype=complex)
    idx = np.arange(n)
    js[:, idx, idx] = -dgs
    jc = np.concatenate([jt, js], axis=2)
    jac = np.concatenate([jc.real, jc.imag], axis=1)
    return value, jac


def _value_batch(F, curve, x):
    n = x.shape[1] // 2
    gt = evaluate(curve, x[:, :n])
    gs = evaluate(curve, x[:, n:])
    return gt @ F.T - gs


# |G|^2 at which a point counts as a root outright.  Deliberately strict:
# along quadratically flat directions of a non-clean constant family the
# residual grows like eps^4, so this gate keeps every harvested point within
# ~1e-7 of the family, two orders inside the constancy classification below.
VALUE_TOL_SQ = 1e-28


def _newton_chunk(F, curve, x0, opts: SolveOptions):
    """Damped Newton from each row of x0.  Returns the converged roots.

    A run converges when its undamped Newton step drops below the step
    tolerance or its residual reaches machine scale; the latter matters on
    non-isolated solution families (circle targets, the constant family)
    where the Jacobian is singular and step norms never settle.  A run dies
    on a singular Jacobian, a non-finite value, or a backtracking line
    search that cannot reduce |G|^2.
    """
    n = x0.shape[1] // 2
    x = np.mod(np.asarray(x0, dtype=float), 2 * np.pi)
    roots = []

    for _ in range(opts.max_iter):
        if len(x) == 0:
            break
        G, jac = _system_batch(F, curve, x[:, :n], x[:, n:])
        f = np.sum(np.abs(G) ** 2, axis=1)

        at_root = np.isfinite(f) & (f < VALUE_TOL_SQ)
        if at_root.any():
            roots.append(x[at_root])
        x, jac, f, G = x[~at_root], jac[~at_root], f[~at_root], G[~at_root]
        if len(x) == 0:
            break

        rhs = -np.concatenate([G.real, G.imag], axis=1)
        det = np.linalg.det(jac)
        solvable = np.isfinite(det) & (det != 0) & np.isfinite(f)
        delta = np.zeros_like(rhs)
        if solvable.any():
            delta[solvable] = np.linalg.solve(jac[solvable], rhs[solvable, :, None])[:, :, 0]
        step_norm = np.max(np.abs(delta), axis=1)
        solvable &= np.isfinite(step_norm)

        done = solvable & (step_norm < opts.step_tol)
        if done.any():
            roots.append(x[done])

        searching = solvable & ~done
        lam = np.ones(len(x))
        accepted = np.zeros(len(x), dtype=bool)
        for _ in range(30):
            trial = searching & ~accepted
            if not trial.any():
                break
            ti = np.where(trial)[0]
            cand = np.mod(x[ti] + lam[ti, None] * delta[ti], 2 * np.pi)
            f_new = np.sum(np.abs(_value_batch(F, curve, cand)) ** 2, axis=1)
            ok = np.isfinite(f_new) & (f_new <= f[ti] * (1 - 1e-4 * lam[ti]))
            x[ti[ok]] = cand[ok]
            accepted[ti[ok]] = True
            lam[ti[~ok]] /= 2

        x = x[accepted]

    return (np.concatenate(roots, axis=0) if roots else np.empty((0, 2 * n)))


def _halton_starts(n_starts: int, dim: int, seed: int) -> np.ndarray:
    sampler = qmc.Halton(d=dim, scramble=True, seed=seed)
    return sampler.random(n_starts) * 2 * np.pi


def _curve_sample_cache(curve: JordanCurve, n_samples: int = DEFAULT_SAMPLES):
    ts = np.linspace(0.0, 2 * np.pi, n_samples, endpoint=False)
    return ts, evaluate(curve, ts)


def curve_distance(curve: JordanCurve, points, cache=None, refine_steps: int = 3) -> np.ndarray:
    """Distance from each point to the curve.

    Dense scan over cached samples followed by Newton refinement of the
    nearest-parameter problem.  Three refinement steps resolve distances well
    below the acceptance tolerance at the default sampling resolution.
    """
    z = np.atleast_1d(np.asarray(points, dtype=complex))
    ts, samples = cache if cache is not None else _curve_sample_cache(curve)
    out = np.empty(len(z))
    block = 1024
    for lo in range(0, len(z), block):
        zi = z[lo : lo + block]
        dists = np.abs(samples[None, :] - zi[:, None])
        best = np.argmin(dists, axis=1)
        t = ts[best]
        d = dists[np.arange(len(zi)), best]
        for _ in range(refine_steps):
            g = evaluate(curve, t) - zi
            dg = derivative(curve, t)
            ddg = derivative(curve, t, order=2)
            grad = 2 * (np.conj(g) * dg).real
            hess = 2 * (np.abs(dg) ** 2 + (np.conj(g) * ddg).real)
            with np.errstate(divide="ignore", invalid="ignore"):
                t = np.where(hess > 0, t - grad / hess, t)
            d = np.minimum(d, np.abs(evaluate(curve, t) - zi))
        out[lo : lo + block] = d
    return out


# Newton iterates that lock onto the constant family do so only to the
# precision the (possibly non-clean) family geometry allows, about the fourth
# root of the value gate along the flattest directions.  Tail comparison
# alone cannot separate those from true solutions, so a candidate also counts
# as constant when its whole image set is a blob far below curve scale: a
# degree-d image meets a smooth arc with bounded contact order, so genuine
# nonconstant inscriptions spread their images at curve scale.
SOLVER_CONSTANT_TOL = 1e-6
IMAGE_BLOB_REL = 1e-2


def _classify_constant(coeffs: np.ndarray, images: np.ndarray, curve_diam: float) -> np.ndarray:
    """Row mask for candidates indistinguishable from the constant family."""
    scale = np.max(np.abs(coeffs), axis=1)
    tail = np.max(np.abs(coeffs[:, 1:]), axis=1)
    zero_tail = tail == 0
    with np.errstate(divide="ignore", invalid="ignore"):
        rel = np.where(scale > 0, tail / scale, 0.0)
    small_tail = zero_tail | (rel < SOLVER_CONSTANT_TOL)

    spread = np.max(
        np.abs(images[:, :, None] - images[:, None, :]), axis=(1, 2)
    )
    blob = spread < IMAGE_BLOB_REL * curve_diam
    return small_tail | blob


def _dedupe_sorted(coeffs: np.ndarray, tol: float) -> np.ndarray:
    """Indices of deduplicated rows after lexicographic sort by (re, im) parts."""
    interleaved = np.empty((len(coeffs), 2 * coeffs.shape[1]))
    interleaved[:, 0::2] = coeffs.real
    interleaved[:, 1::2] = coeffs.imag
    order = np.lexsort(interleaved.T[::-1])
    kept: List[int] = []
    for i in order:
        if kept and np.min(np.max(np.abs(coeffs[i] - coeffs[kept]), axis=1)) <= tol:
            continue
        kept.append(int(i))
    return np.array(kept, dtype=int)


def find_inscriptions(
    curve: JordanCurve, config: PointConfig, opts: Optional[SolveOptions] = None
) -> SolveReport:
    """All nonconstant inscriptions of the configuration found by multistart.

    Every reported inscription is re-verified by evaluating the polynomial at
    all 2n points and measuring the distance to the curve; only residuals
    below the acceptance tolerance survive.  The report is deterministic for
    fixed inputs and seed, independent of chunking or thread count.
    """
    opts = opts or SolveOptions()
    n = config.n
    if n > 8:
        raise InvalidCurve(f"solver supports n <= 8, got n = {n}")
    report = validate(curve)
    if not report.valid:
        raise InvalidCurve("curve fails validation; fit or repair it first")

    n_starts = opts.n_starts if opts.n_starts is not None else 2000 * n
    transfer = build_transfer(config)
    F = np.asarray(transfer.matrix)
    t_start = time.perf_counter()

    starts = _halton_starts(n_starts, 2 * n, opts.seed)
    chunks = [starts[lo : lo + opts.chunk_size] for lo in range(0, len(starts), opts.chunk_size)]

    truncated = False
    results: List[Optional[np.ndarray]] = [None] * len(chunks)

    def run_chunk(i):
        return _newton_chunk(F, curve, chunks[i], opts)

    if opts.threads and opts.threads > 1:
        with ThreadPoolExecutor(max_workers=opts.threads) as pool:
            futures = {}
            for i in range(len(chunks)):
                if opts.time_budget_s and time.perf_counter() - t_start > opts.time_budget_s:
                    truncated = True
                    break
                futures[i] = pool.submit(run_chunk, i)
            for i, fut in futures.items():
                results[i] = fut.result()
    else:
        for i in range(len(chunks)):
            if opts.time_budget_s and time.perf_counter() - t_start > opts.time_budget_s:
                truncated = True
                break
            results[i] = run_chunk(i)

    submitted = sum(len(chunks[i]) for i, r in enumerate(results) if r is not None)
    roots = np.concatenate(
        [r for r in results if r is not None] or [np.empty((0, 2 * n))], axis=0
    )
    n_converged = len(roots)

    if n_converged == 0:
        return SolveReport(
            inscriptions=[],
            n_starts=submitted if truncated else n_starts,
            n_converged=0,
            n_constant_discarded=0,
            wall_time_s=time.perf_counter() - t_start,
            truncated=truncated,
        )

    # Parameters -> polynomials, by interpolation at the alpha nodes.
    t_all, s_all = roots[:, :n], roots[:, n:]
    Va = vandermonde(config.alpha)
    values = evaluate(curve, t_all)
    coeffs = np.linalg.solve(Va, values.T).T
    coeffs += np.linalg.solve(Va, (values - coeffs @ Va.T).T).T

    cache = _curve_sample_cache(curve)
    xs, ys = cache[1].real, cache[1].imag
    curve_diam = float(np.hypot(xs.max() - xs.min(), ys.max() - ys.min()))

    images = np.zeros((len(coeffs), 2 * n), dtype=complex)
    for j, z in enumerate(config.points):
        col = np.zeros(len(coeffs), dtype=complex)
        for a in coeffs.T[::-1]:
            col = col * z + a
        images[:, j] = col

    const_mask = _classify_constant(coeffs, images, curve_diam)
    n_constant = int(const_mask.sum())

    keep = ~const_mask
    coeffs, t_all, s_all, images = coeffs[keep], t_all[keep], s_all[keep], images[keep]

    # Unconditional soundness gate: direct evaluation against the curve.
    inscriptions: List[Inscription] = []
    if len(coeffs):
        dists = curve_distance(curve, images.ravel(), cache).reshape(len(coeffs), 2 * n)
        residuals = dists.max(axis=1)
        sound = residuals < opts.residual_tol
        coeffs, t_all, s_all, residuals = (
            coeffs[sound],
            t_all[sound],
            s_all[sound],
            residuals[sound],
        )

        if len(coeffs):
            kept = _dedupe_sorted(coeffs, opts.dedup_tol)
            _, jacs = _system_batch(F, curve, t_all[kept], s_all[kept])
            svals = np.linalg.svd(jacs, compute_uv=False)
            degenerate = svals[:, -1] < DEGENERACY_REL_TOL * svals[:, 0]
            for row, i in enumerate(kept):
                inscriptions.append(
                    Inscription(
                        poly=Polynomial(coeffs[i]),
                        t_params=np.mod(t_all[i], 2 * np.pi),
                        s_params=np.mod(s_all[i], 2 * np.pi),
                        residual=float(residuals[i]),
                        constant=False,
                        degenerate=bool(degenerate[row]),
                    )
                )

    return SolveReport(
        inscriptions=inscriptions,
        n_starts=submitted if truncated else n_starts,
        n_converged=n_converged,
        n_constant_discarded=n_constant,
        wall_time_s=time.perf_counter() - t_start,
        truncated=truncated,
    )


@dataclass(frozen=True)
class CassiniFit:
    """Product-of-distances locus |z - f1| |z - f2| = level through six points."""

    foci: Tuple[complex, complex]
    level: float
    max_deviation: float

    def to_dict(self) -> dict:
        return {
            "foci": [[f.real, f.imag] for f in self.foci],
            "level": float(self.level),
            "max_deviation": float(self.max_deviation),
        }


def fit_cassini(points: Sequence[complex], rel_tol: float = 1e-6) -> Optional[CassiniFit]:
    """Fit |q - f1| |q - f2| = c to six points, or None when no oval fits.

    Levenberg-Marquardt over the foci with the level eliminated as the mean
    product; multistart from the centroid and the principal axis.  On
    success the equivalence with a quadratic circle inscription is
    cross-checked: p(z) = (z - f1)(z - f2) / c maps the points to unit
    modulus within the fitted deviation.
    """
    q = np.atleast_1d(np.asarray(points, dtype=complex))
    if len(q) != 6:
        raise DegenerateInput("Cassini fit expects exactly 6 points")
    diff = np.abs(q[:, None] - q[None, :])
    np.fill_diagonal(diff, np.inf)
    if diff.min() <= 1e-10:
        raise DegenerateInput("repeated points")
    diam = float(diff[np.isfinite(diff)].max())

    def residuals(params):
        f1 = params[0] + 1j * params[1]
        f2 = params[2] + 1j * params[3]
        prod = np.abs(q - f1) * np.abs(q - f2)
        return prod - prod.mean()

    centroid = q.mean()
    centered = q - centroid
    cov = np.cov(np.vstack([centered.real, centered.imag]))
    _, evecs = np.linalg.eigh(cov)
    axis = complex(evecs[0, -1], evecs[1, -1])

    starts = []
    for scale in (0.0, 0.25, 0.5, 1.0):
        d = scale * (diam / 2) * axis
        starts.append([(centroid + d).real, (centroid + d).imag, (centroid - d).real, (centroid - d).imag])
    rng = np.random.default_rng(0)
    for _ in range(8):
        f1 = centroid + (rng.normal() + 1j * rng.normal()) * diam / 3
        f2 = centroid + (rng.normal() + 1j * rng.normal()) * diam / 3
        starts.append([f1.real, f1.imag, f2.real, f2.imag])

    best = None
    for x0 in starts:
        sol = least_squares(residuals, x0, method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15)
        dev = float(np.max(np.abs(sol.fun)))
        if best is None or dev < best[0]:
            best = (dev, sol.x)

    dev, x = best
    if dev >= rel_tol * diam:
        return None
    f1, f2 = complex(x[0], x[1]), complex(x[2], x[3])
    level = float(np.mean(np.abs(q - f1) * np.abs(q - f2)))
    if level <= 0:
        return None
    # Quadratic cross-check: (z - f1)(z - f2)/c sends the points to |w| = 1.
    w = (q - f1) * (q - f2) / level
    if np.max(np.abs(np.abs(w) - 1.0)) > 10 * dev / level + 1e-12:
        return None
    if (f2.real, f2.imag) < (f1.real, f1.imag):
        f1, f2 = f2, f1
    return CassiniFit(foci=(f1, f2), level=level, max_deviation=dev)


def random_curve(rng: np.random.Generator, max_attempts: int = 50) -> JordanCurve:
    """Random smooth simple curve: c_1 = 1 plus mild harmonics up to |k| = 6."""
    for _ in range(max_attempts):
        coeffs = {1: 1.0 + 0.0j}
        for k in list(range(-6, -1)) + list(range(2, 7)):
            mag = rng.uniform(0, 0.3 / k**2)
            phase = rng.uniform(0, 2 * np.pi)
            coeffs[k] = mag * np.exp(1j * phase)
        curve = JordanCurve(coeffs, K=6)
        if validate(curve).valid:
            return curve
    raise CurveGenerationFailed("no valid curve after rejection sampling")


def random_concyclic_config(rng: np.random.Generator, n: int = 3) -> PointConfig:
    """2n random points on a random circle, alternately split into alpha/beta."""
    center = rng.normal(0, 0.3) + 1j * rng.normal(0, 0.3)
    radius = rng.uniform(0.7, 1.3)
    for _ in range(1000):
        angles = np.sort(rng.uniform(0, 2 * np.pi, size=2 * n))
        gaps = np.diff(np.concatenate([angles, [angles[0] + 2 * np.pi]]))
        if gaps.min() > 0.1 / n:
            z = center + radius * np.exp(1j * angles)
            return PointConfig(alpha=z[0::2], beta=z[1::2])
    raise DegenerateInput("failed to sample separated concyclic points")


def colinear_config(n: int = 3) -> PointConfig:
    """2n evenly spaced points on the real axis, alternately split."""
    pts = np.arange(2 * n, dtype=float) - (2 * n - 1) / 2
    return PointConfig(alpha=pts[0::2] + 0j, beta=pts[1::2] + 0j)


def plant_inscription(
    seed: int, d: int = 2, max_attempts: int = 500
) -> Tuple[Polynomial, PointConfig, JordanCurve]:
    """Construct (p, Q, curve) with p a known nonconstant inscription of Q.

    Draws a random polynomial and random circle points, threads an exact
    band-limited curve through the image points (ordered by angle around
    their centroid), and keeps the triple only when the curve validates and
    the images are well separated.  The planted polynomial then inscribes
    with residual at rounding scale, which exercises recovery end to end.
    """
    rng = np.random.default_rng(seed)
    n = d + 1
    for _ in range(max_attempts):
        coeffs = rng.normal(0, 0.5, n) + 1j * rng.normal(0, 0.5, n)
        if abs(coeffs[-1]) < 0.3:
            continue
        poly = Polynomial(coeffs)
        try:
            q = random_concyclic_config(rng, n=n)
        except DegenerateInput:
            continue
        images = poly(q.points)
        gaps = np.abs(images[:, None] - images[None, :])
        np.fill_diagonal(gaps, np.inf)
        if gaps.min() < 0.15 * gaps[np.isfinite(gaps)].max():
            continue
        center = images.mean()
        order = np.argsort(np.angle(images - center))
        radii = np.abs(images[order] - center)
        if radii.min() < 0.25 * radii.max():
            continue
        curve = curve_through_points(images[order])
        if validate(curve).valid:
            return poly, q, curve
    raise CurveGenerationFailed("no valid planted instance within attempt budget")


@dataclass(frozen=True)
class TrialRecord:
    """Reproducible record of one randomized existence trial."""

    kind: str
    curve_seed: int
    config_seed: int
    degree: int
    found: bool
    report: SolveReport
    curve: JordanCurve
    config: PointConfig

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "curve_seed": self.curve_seed,
            "config_seed": self.config_seed,
            "degree": self.degree,
            "found": self.found,
            "curve": self.curve.to_dict(),
            "config": self.config.to_dict(),
            "report": self.report.canonical_dict(),
        }


def theorem_trial(
    curve_seed: int,
    config_seed: int,
    d: int = 2,
    kind: str = "concyclic",
    n_starts: Optional[int] = None,
    threads: int = 1,
) -> TrialRecord:
    """One randomized trial of an inscription-existence statement.

    kind 'concyclic' draws 2(d+1) random concyclic points and a random curve;
    'pinwheel' draws a random rotation angle for the (d+1)-gon pinwheel;
    'colinear' pairs evenly spaced real points with the unit circle, where no
    nonconstant quadratic inscription can exist.
    """
    rng_curve = np.random.default_rng(curve_seed)
    rng_config = np.random.default_rng(config_seed)
    n = d + 1

    if kind == "concyclic":
        curve = random_curve(rng_curve)
        config = random_concyclic_config(rng_config, n=n)
    elif kind == "pinwheel":
        curve = random_curve(rng_curve)
        theta = rng_config.uniform(0.1, 0.9) * 2 * np.pi / n
        config = make_pinwheel(n, theta)
    elif kind == "colinear":
        curve = unit_circle()
        config = colinear_config(n=n)
    else:
        raise ValueError(f"unknown trial kind {kind!r}")

    opts = SolveOptions(n_starts=n_starts, seed=config_seed, threads=threads)
    report = find_inscriptions(curve, config, opts)
    return TrialRecord(
        kind=kind,
        curve_seed=curve_seed,
        config_seed=config_seed,
        degree=d,
        found=len(report.inscriptions) > 0,
        report=report,
        curve=curve,
        config=config,
    )
