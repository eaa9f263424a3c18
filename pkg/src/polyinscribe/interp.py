"""Evaluation and interpolation of low-degree complex polynomials.

The transfer map of a configuration sends the values of a degree <= n-1
polynomial at the nodes alpha to its values at the nodes beta.  It is the
linear map V_beta * inv(V_alpha) built from the two Vandermonde matrices,
and it always fixes the all-ones vector (constants interpolate to
constants).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .config import PointConfig
from .errors import IllConditioned, RepeatedNodes

N_MAX = 12
N_WARN = 8
COND_LIMIT = 1e12
CONSTANT_TOL = 1e-7
RANK_REL_TOL = 1e-8


@dataclass(frozen=True)
class Polynomial:
    """Complex polynomial a_0 + a_1 z + ... + a_{n-1} z^{n-1}."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex, ndmin=1)
        if c.ndim != 1 or len(c) < 1:
            raise ValueError("coefficients must be a nonempty 1-d sequence")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        nz = np.nonzero(self.coeffs)[0]
        return int(nz[-1]) if len(nz) else 0

    @property
    def is_constant(self) -> bool:
        """True when the nonconstant part is negligible.

        The tail a_1..a_{n-1} is compared against the largest coefficient
        magnitude; an exactly zero tail is constant regardless of scale.
        """
        tail = self.coeffs[1:]
        if len(tail) == 0 or not tail.any():
            return True
        scale = float(np.max(np.abs(self.coeffs)))
        return bool(np.max(np.abs(tail)) < CONSTANT_TOL * scale)

    def __call__(self, z):
        return ev(self, z)

    def to_list(self):
        return [[float(a.real), float(a.imag)] for a in self.coeffs]


def _check_nodes(nodes: np.ndarray):
    diff = np.abs(nodes[:, None] - nodes[None, :])
    np.fill_diagonal(diff, np.inf)
    if diff.min() <= 1e-14 * max(1.0, float(np.abs(nodes).max())):
        raise RepeatedNodes("interpolation nodes must be pairwise distinct")


def vandermonde(nodes: Sequence[complex]) -> np.ndarray:
    """Vandermonde matrix with rows indexed by node, columns by power 0..n-1."""
    z = np.atleast_1d(np.asarray(nodes, dtype=complex))
    _check_nodes(z)
    return z[:, None] ** np.arange(len(z))


def ev(poly: Polynomial, nodes) -> np.ndarray:
    """Evaluate a polynomial at the given nodes by Horner's scheme."""
    z = np.asarray(nodes, dtype=complex)
    out = np.zeros_like(z)
    for a in poly.coeffs[::-1]:
        out = out * z + a
    return out if out.shape else complex(out)


def interpolate(nodes: Sequence[complex], values: Sequence[complex]) -> Polynomial:
    """The unique degree <= n-1 polynomial with poly(nodes[i]) = values[i].

    Direct solve with partial pivoting plus one step of iterative refinement.
    Rejects n > 12 outright and condition estimates above 1e12.
    """
    z = np.atleast_1d(np.asarray(nodes, dtype=complex))
    v = np.atleast_1d(np.asarray(values, dtype=complex))
    if len(z) != len(v):
        raise ValueError("nodes and values must have the same length")
    if len(z) > N_MAX:
        raise ValueError(f"interpolation supports at most {N_MAX} nodes")
    if len(z) > N_WARN:
        warnings.warn("Vandermonde conditioning degrades quickly beyond n = 8", stacklevel=2)
    V = vandermonde(z)
    cond = float(np.linalg.cond(V))
    if not np.isfinite(cond) or cond > COND_LIMIT:
        raise IllConditioned(f"node matrix condition estimate {cond:.3e} exceeds {COND_LIMIT:.0e}")
    a = np.linalg.solve(V, v)
    a += np.linalg.solve(V, v - V @ a)
    return Polynomial(coeffs=a)


@dataclass(frozen=True)
class TransferMap:
    """Linear map taking values at the alpha nodes to values at the beta nodes."""

    matrix: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray
    condition_estimate: float

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def __call__(self, values) -> np.ndarray:
        return self.matrix @ np.asarray(values, dtype=complex)

    def to_list(self):
        return [[[float(e.real), float(e.imag)] for e in row] for row in self.matrix]


def build_transfer(config: PointConfig) -> TransferMap:
    """Transfer map of a configuration via the two Vandermonde matrices.

    Solves F * V_alpha = V_beta with one refinement pass, then checks the
    constants-fixed identity F @ ones = ones as a conditioning guard.
    """
    Va = vandermonde(config.alpha)
    Vb = vandermonde(config.beta)
    cond = float(np.linalg.cond(Va))
    if not np.isfinite(cond) or cond > COND_LIMIT:
        raise IllConditioned(f"alpha-node condition estimate {cond:.3e} exceeds {COND_LIMIT:.0e}")
    F = np.linalg.solve(Va.T, Vb.T).T
    F += np.linalg.solve(Va.T, (Vb - F @ Va).T).T
    ones = np.ones(config.n)
    drift = float(np.max(np.abs(F @ ones - ones)))
    if drift > 1e-6:
        raise IllConditioned(f"constants are not fixed to tolerance (drift {drift:.3e})")
    return TransferMap(matrix=F, alpha=config.alpha, beta=config.beta, condition_estimate=cond)


def build_transfer_pinwheel(n: int, theta: float) -> TransferMap:
    """Transfer map of the theta-pinwheel, for any real theta.

    Uses the closed form V * D_theta * V^{-1} where V is the root-of-unity
    Vandermonde matrix (a discrete Fourier transform, unitary after dividing
    by sqrt(n)) and D_theta = diag(exp(i*(k-1)*theta)).  The inverse is the
    scaled conjugate transpose, so no linear solve is involved.  At
    theta = 2*pi/n this is exactly the single cyclic coordinate shift, and
    theta -> F_theta is a one-parameter group.
    """
    n = int(n)
    if n < 2:
        raise ValueError("pinwheel transfer needs n >= 2")
    j = np.arange(1, n + 1)
    alpha = np.exp(2j * np.pi * j / n)
    V = alpha[:, None] ** np.arange(n)
    D = np.exp(1j * theta * np.arange(n))
    F = (V * D) @ V.conj().T / n
    beta = np.exp(1j * theta) * alpha
    return TransferMap(matrix=F, alpha=alpha, beta=beta, condition_estimate=1.0)


def cyclic_shift_matrix(n: int) -> np.ndarray:
    """Matrix of (z_1, ..., z_n) -> (z_2, ..., z_n, z_1)."""
    return np.eye(n, dtype=complex, k=1) + np.eye(n, dtype=complex, k=-(n - 1))


def imag_constraint_singular_values(transfer) -> np.ndarray:
    """Singular values of the map v in R^n -> Im(F v)."""
    F = transfer.matrix if isinstance(transfer, TransferMap) else np.asarray(transfer, dtype=complex)
    return np.linalg.svd(F.imag, compute_uv=False)


def real_intersection_dim(transfer, rel_tol: float = RANK_REL_TOL) -> int:
    """Dimension of F(R^n) intersected with R^n.

    Equals the kernel dimension of the real matrix Im(F): a real vector v has
    real image exactly when Im(F) v = 0.  Singular values are thresholded
    relative to the largest one; an Im(F) that is negligible against F itself
    means F is real and the intersection is all of R^n.
    """
    F = transfer.matrix if isinstance(transfer, TransferMap) else np.asarray(transfer, dtype=complex)
    n = F.shape[0]
    s = np.linalg.svd(F.imag, compute_uv=False)
    scale = float(np.max(np.abs(F)))
    if s[0] <= 1e-12 * max(scale, 1.0):
        return n
    return int(np.sum(s < rel_tol * s[0]))


__all__ = [
    "Polynomial",
    "TransferMap",
    "vandermonde",
    "ev",
    "interpolate",
    "build_transfer",
    "build_transfer_pinwheel",
    "cyclic_shift_matrix",
    "real_intersection_dim",
    "imag_constraint_singular_values",
]
