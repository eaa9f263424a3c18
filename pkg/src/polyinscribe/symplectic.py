"""Simultaneous diagonal symplectic forms for interleaved circle configurations.

For an interleaved unit-circle configuration there is, up to scale, exactly
one pair of diagonal 2-forms (one per side of the transfer map) pulled back
into each other by the map.  The pair is computed here as the left nullspace
of a 2n x (2n-1) matrix of point powers, then normalized so both coefficient
lists are positive reals.  An independent closed-form product of cross-ratios
reproduces the same coefficient ratios and serves as the oracle.

The product torus built from any closed curve is isotropic for every
diagonal form; its image under the transfer map is isotropic exactly for the
matched form, which is what :func:`verify_lagrangian` measures.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .config import PointConfig, check_interleaved_on_circle
from .curves import JordanCurve, derivative, validate
from .errors import (
    DegenerateCrossRatio,
    InscribeError,
    InvalidCurve,
    NotInterleaved,
    NullspaceNotOneDimensional,
    ZeroPoint,
)
from .interp import TransferMap, build_transfer

NULLSPACE_REL_TOL = 1e-10
IMAG_LEAK_TOL = 1e-9
PULLBACK_TOL = 1e-8


class Side(enum.Enum):
    """Which torus a Lagrangian check targets."""

    ALPHA_SIDE = "alpha"
    BETA_SIDE = "beta"


@dataclass(frozen=True)
class DiagonalFormPair:
    """Coefficients of the two matched diagonal 2-forms.

    ``lambda_raw`` and ``mu_raw`` are the complexified coefficients (in the
    dz_k ^ dzbar_k basis) of the alpha-side and beta-side forms.  They are
    normalized so mu_raw[n-1] = i, which makes every raw coefficient i times
    a positive real.  ``lambda_pos`` and ``mu_pos`` are the corresponding
    positive dx_k ^ dy_k coefficients (twice those reals); in particular
    mu_pos[n-1] == 2 exactly.
    """

    lambda_raw: np.ndarray
    mu_raw: np.ndarray
    lambda_pos: np.ndarray
    mu_pos: np.ndarray

    def __post_init__(self):
        for name in ("lambda_raw", "mu_raw", "lambda_pos", "mu_pos"):
            arr = np.asarray(getattr(self, name))
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def n(self) -> int:
        return len(self.lambda_pos)

    def to_dict(self) -> dict:
        return {
            "lambda": [float(v) for v in self.lambda_pos],
            "mu": [float(v) for v in self.mu_pos],
            "lambda_raw": [[float(v.real), float(v.imag)] for v in self.lambda_raw],
            "mu_raw": [[float(v.real), float(v.imag)] for v in self.mu_raw],
        }


def power_matrix(config: PointConfig) -> np.ndarray:
    """The 2n x (2n-1) matrix of point powers whose left nullspace is the form.

    Row k (k < n) is alpha_k raised to the exponents 1-n .. n-1; row n+k is
    the same in beta_k.  The middle column is all ones.  Requires nonzero
    points because of the negative exponents.
    """
    pts = config.points
    if np.min(np.abs(pts)) < 1e-12:
        raise ZeroPoint("power matrix needs nonzero points")
    exponents = np.arange(1 - config.n, config.n)
    return pts[:, None] ** exponents


def raw_form_coefficients(config: PointConfig) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Left-null direction of the power matrix, normalized, without positivity checks.

    Returns (lambda_raw, mu_raw, singular_values).  The null vector stores
    (lambda_1..lambda_n, -mu_1..-mu_n); it is rescaled so its last entry is
    -i, i.e. mu_n = i.  Positivity of the resulting coefficients is exactly
    the interleaving hypothesis and is enforced by :func:`diagonal_forms`,
    not here.
    """
    V = power_matrix(config)
    U, s, _ = np.linalg.svd(V)
    if s[-1] / s[0] < NULLSPACE_REL_TOL:
        raise NullspaceNotOneDimensional(
            "power matrix has rank below 2n-1; configuration is degenerate"
        )
    u = np.conj(U[:, -1])
    if abs(u[-1]) < 1e-14:
        raise NullspaceNotOneDimensional("null vector has vanishing final coefficient")
    u = u * (-1j / u[-1])
    n = config.n
    return u[:n], -u[n:], s


def diagonal_forms(config: PointConfig, verify_pullback: bool = True) -> DiagonalFormPair:
    """The unique pair of positive diagonal forms exchanged by the transfer map.

    Requires an interleaved unit-circle configuration; the positivity of all
    2n normalized coefficients is exactly what interleaving buys.  When
    ``verify_pullback`` is set, the matrix identity F^T J_mu F = J_lambda is
    checked as a post-condition.
    """
    if not check_interleaved_on_circle(config):
        raise NotInterleaved("configuration is not interleaved on the unit circle")
    lam_raw, mu_raw, _ = raw_form_coefficients(config)

    lam_c = -2j * lam_raw
    mu_c = -2j * mu_raw
    leak = max(float(np.max(np.abs(lam_c.imag))), float(np.max(np.abs(mu_c.imag))))
    if leak > IMAG_LEAK_TOL * max(1.0, float(np.max(np.abs(lam_c)))):
        raise NullspaceNotOneDimensional(
            f"normalized coefficients are not real (imaginary leak {leak:.3e})"
        )
    lam_pos, mu_pos = lam_c.real, mu_c.real
    if np.min(lam_pos) <= 0 or np.min(mu_pos) <= 0:
        raise NotInterleaved("form coefficients are not all positive")

    pair = DiagonalFormPair(
        lambda_raw=lam_raw, mu_raw=mu_raw, lambda_pos=lam_pos, mu_pos=mu_pos
    )
    if verify_pullback:
        res = pullback_residual(pair, build_transfer(config))
        if res > 1e-6:
            raise InscribeError(f"pullback identity violated (residual {res:.3e})")
    return pair


def _form_matrix(coefficients: np.ndarray) -> np.ndarray:
    """Real 2n x 2n matrix of sum_k m_k dx_k ^ dy_k in stacked (x, y) coordinates."""
    n = len(coefficients)
    J = np.zeros((2 * n, 2 * n))
    J[:n, n:] = np.diag(coefficients)
    J[n:, :n] = -np.diag(coefficients)
    return J


def _real_matrix(F: np.ndarray) -> np.ndarray:
    """Complex n x n matrix as a real 2n x 2n matrix on stacked (x, y)."""
    return np.block([[F.real, -F.imag], [F.imag, F.real]])


def pullback_residual(form: DiagonalFormPair, transfer: TransferMap) -> float:
    """Max-norm residual of F^T J_mu F = J_lambda, relative to J_lambda."""
    FR = _real_matrix(np.asarray(transfer.matrix))
    J_mu = _form_matrix(form.mu_pos)
    J_lam = _form_matrix(form.lambda_pos)
    num = float(np.max(np.abs(FR.T @ J_mu @ FR - J_lam)))
    return num / float(np.max(np.abs(J_lam)))


def form_value(coefficients: np.ndarray, u: np.ndarray, v: np.ndarray):
    """Evaluate sum_k m_k dx_k ^ dy_k on complex vectors u, v (broadcasting)."""
    return np.sum(coefficients * (np.conj(u) * v).imag, axis=-1)


def cross_ratio(a: complex, b: complex, c: complex, d: complex) -> complex:
    """The cross-ratio ((a-c)(b-d)) / ((a-d)(b-c))."""
    den = (a - d) * (b - c)
    if den == 0:
        raise DegenerateCrossRatio("cross-ratio denominator vanishes")
    return (a - c) * (b - d) / den


def cross_ratio_oracle(config: PointConfig) -> Tuple[np.ndarray, np.ndarray]:
    """Closed-form coefficient ratios lambda_j/mu_n and mu_j/mu_n.

    Independent of the nullspace computation: each ratio is a product of
    squared moduli and cross-ratios of configuration points.  Interleaving
    makes every factor positive except one cross-ratio in the mu formula,
    whose sign the leading minus restores.
    """
    if not check_interleaved_on_circle(config):
        raise NotInterleaved("configuration is not interleaved on the unit circle")
    a, b = config.alpha, config.beta
    n = config.n
    lam = np.empty(n)
    mu = np.empty(n)

    for j in range(n - 1):
        val = abs((b[n - 1] - a[n - 1]) / (a[j] - a[n - 1])) ** 2
        val *= cross_ratio(a[j], b[n - 1], a[n - 1], b[j])
        for k in range(n - 1):
            if k == j:
                continue
            val *= abs((b[n - 1] - a[k]) / (a[j] - a[k])) ** 2
            val *= cross_ratio(a[j], b[n - 1], a[k], b[k])
        lam[j] = _positive_real(val)

    val = 1.0 + 0.0j
    for k in range(n - 1):
        val *= abs((b[n - 1] - a[k]) / (a[n - 1] - a[k])) ** 2
        val *= cross_ratio(a[n - 1], b[n - 1], a[k], b[k])
    lam[n - 1] = _positive_real(val)

    for j in range(n - 1):
        val = -abs((b[n - 1] - a[j]) / (b[j] - a[j])) ** 2
        val *= cross_ratio(b[n - 1], b[j], a[n - 1], a[j])
        for k in range(n - 1):
            if k == j:
                continue
            val *= abs((b[n - 1] - a[k]) / (b[j] - a[k])) ** 2
            val *= cross_ratio(b[j], b[n - 1], a[k], b[k])
        mu[j] = _positive_real(val)
    mu[n - 1] = 1.0

    return lam, mu


def _positive_real(val: complex) -> float:
    if abs(val.imag) > 1e-9 * max(1.0, abs(val)) or val.real <= 0:
        raise NotInterleaved(f"cross-ratio product {val} is not positive real")
    return float(val.real)


def verify_lagrangian(
    form: DiagonalFormPair,
    which: Side,
    curve: JordanCurve,
    transfer: TransferMap,
    n_samples: int = 64,
    seed: int = 0,
) -> float:
    """Largest normalized form value over tangent frames of the chosen torus.

    Samples points of the product torus, takes the coordinate tangent frame
    (gamma'(t_k) e_k), pushes it through the transfer map on the beta side,
    and returns max |Psi(u, v)| / (|u| |v|) over all frame pairs.  Zero means
    Lagrangian at the sampled points.
    """
    n = form.n
    rng = np.random.default_rng(seed)
    ts = rng.uniform(0.0, 2 * np.pi, size=(n_samples, n))
    tangents = derivative(curve, ts)  # (n_samples, n)

    if which is Side.ALPHA_SIDE:
        coeff = form.lambda_pos
        frames = tangents[:, :, None] * np.eye(n)[None, :, :]  # frame[s, k] = g_k e_k
    else:
        coeff = form.mu_pos
        F = np.asarray(transfer.matrix)
        frames = tangents[:, :, None] * F.T[None, :, :]  # frame[s, k] = g_k F e_k

    worst = 0.0
    for j in range(n):
        for k in range(j + 1, n):
            u, v = frames[:, j, :], frames[:, k, :]
            vals = np.abs(form_value(coeff, u, v))
            norms = np.linalg.norm(u, axis=1) * np.linalg.norm(v, axis=1)
            worst = max(worst, float(np.max(vals / norms)))
    return worst


def maslov_index_diagonal(curve: JordanCurve, n: int, n_samples: int = 2048) -> int:
    """Winding number of (gamma'/|gamma'|)^(2n) over one period.

    Computed by phase unwrapping of gamma' on a dense grid; equals 2n times
    the turning number of the curve.  Raises InvalidCurve for curves failing
    validation.
    """
    report = validate(curve, n_samples=n_samples)
    if not report.valid:
        raise InvalidCurve("Maslov winding needs an immersed simple curve")
    return 2 * int(n) * report.turning_number
