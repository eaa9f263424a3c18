"""Point configurations: the 2n points driving an inscription problem.

A configuration holds two n-tuples alpha and beta of pairwise distinct
complex points.  Helpers cover circle fitting, interleaving order on the
unit circle, pinwheel construction, and detection of six-point sets that
reduce to a four-point problem through a quadratic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DegenerateInput, NotOnUnitCircle, ThetaOutOfRange

DISTINCTNESS_TOL = 1e-10
CIRCLE_FIT_REL_TOL = 1e-8
MIDPOINT_TOL = 1e-8


@dataclass(frozen=True)
class PointConfig:
    """Two n-tuples of pairwise distinct points (n >= 2)."""

    alpha: np.ndarray
    beta: np.ndarray

    def __post_init__(self):
        a = np.atleast_1d(np.asarray(self.alpha, dtype=complex))
        b = np.atleast_1d(np.asarray(self.beta, dtype=complex))
        if a.ndim != 1 or b.ndim != 1 or len(a) != len(b):
            raise DegenerateInput("alpha and beta must be 1-d and the same length")
        if len(a) < 2:
            raise DegenerateInput("need n >= 2 points per tuple")
        pts = np.concatenate([a, b])
        diff = np.abs(pts[:, None] - pts[None, :])
        np.fill_diagonal(diff, np.inf)
        if diff.min() <= DISTINCTNESS_TOL:
            raise DegenerateInput("configuration points must be pairwise distinct")
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def points(self) -> np.ndarray:
        """All 2n points, alpha first."""
        return np.concatenate([self.alpha, self.beta])

    def interleaved(self) -> np.ndarray:
        """The 2n points in the order alpha_1, beta_1, ..., alpha_n, beta_n."""
        out = np.empty(2 * self.n, dtype=complex)
        out[0::2] = self.alpha
        out[1::2] = self.beta
        return out

    def to_dict(self) -> dict:
        return {
            "alpha": [[float(z.real), float(z.imag)] for z in self.alpha],
            "beta": [[float(z.real), float(z.imag)] for z in self.beta],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PointConfig":
        if "alpha" in data and "beta" in data:
            a = np.asarray(data["alpha"], dtype=float)
            b = np.asarray(data["beta"], dtype=float)
            return cls(alpha=a[:, 0] + 1j * a[:, 1], beta=b[:, 0] + 1j * b[:, 1])
        if "points" in data:
            return split_circular_points(np.asarray(data["points"], dtype=float))
        raise DegenerateInput("config JSON needs either alpha/beta or points")


def split_circular_points(points: np.ndarray) -> PointConfig:
    """Split a flat list of 2n concyclic points into alternating alpha/beta.

    Points are sorted by argument around their fitted circle center; this
    form is only meaningful for concyclic input.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 4 or len(pts) % 2:
        raise DegenerateInput("points form needs an even count of at least 4 [x, y] pairs")
    z = pts[:, 0] + 1j * pts[:, 1]
    fit = is_concyclic(z)
    if fit is None:
        raise DegenerateInput("points form requires concyclic points")
    order = np.argsort(np.angle(z - fit.center))
    z = z[order]
    return PointConfig(alpha=z[0::2], beta=z[1::2])


@dataclass(frozen=True)
class CircleFit:
    center: complex
    radius: float
    max_deviation: float

    def to_dict(self) -> dict:
        return {
            "center": [float(self.center.real), float(self.center.imag)],
            "radius": float(self.radius),
            "max_deviation": float(self.max_deviation),
        }


def is_concyclic(points: Sequence[complex], rel_tol: float = CIRCLE_FIT_REL_TOL) -> Optional[CircleFit]:
    """Least-squares circle through the points, or None.

    Uses the algebraic (Kasa) fit, then accepts when the worst radial
    deviation is below ``rel_tol`` times the point-set diameter.  Colinear
    points never fit: a line does not count as a circle here.
    """
    z = np.atleast_1d(np.asarray(points, dtype=complex))
    if len(z) < 3:
        raise DegenerateInput("need at least 3 points for a circle fit")
    diff = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(diff, np.inf)
    if diff.min() <= DISTINCTNESS_TOL:
        raise DegenerateInput("repeated points in circle fit")
    diameter = float(np.max(np.abs(z[:, None] - z[None, :])))

    x, y = z.real, z.imag
    A = np.column_stack([2 * x, 2 * y, np.ones(len(z))])
    rhs = x * x + y * y
    sol, *_ = np.linalg.lstsq(A, rhs, rcond=None)
    cx, cy, c0 = sol
    r2 = c0 + cx * cx + cy * cy
    if not np.isfinite(r2) or r2 <= 0:
        return None
    center = complex(cx, cy)
    radius = float(np.sqrt(r2))
    dev = float(np.max(np.abs(np.abs(z - center) - radius)))
    if dev >= rel_tol * diameter:
        return None
    return CircleFit(center=center, radius=radius, max_deviation=dev)


def check_interleaved_on_circle(config: PointConfig, tol: float = 1e-9) -> bool:
    """True when alpha_1, beta_1, ..., alpha_n, beta_n sit in cyclic order on S^1.

    Both traversal orientations count.  Raises NotOnUnitCircle when any point
    is farther than ``tol`` from the unit circle.
    """
    seq = config.interleaved()
    if np.max(np.abs(np.abs(seq) - 1.0)) >= tol:
        raise NotOnUnitCircle("configuration points must lie on the unit circle")
    rel = np.mod(np.angle(seq) - np.angle(seq[0]), 2 * np.pi)

    def strictly_increasing(v):
        return bool(np.all(np.diff(v) > 0)) and bool(np.all(v[1:] > 0))

    ccw = strictly_increasing(rel)
    cw = strictly_increasing(np.mod(-np.angle(seq) + np.angle(seq[0]), 2 * np.pi))
    return ccw or cw


def make_pinwheel(n: int, theta: float) -> PointConfig:
    """Vertices of a regular n-gon together with its rotation by theta.

    alpha_j = w^j and beta_j = exp(i*theta) * w^j for w = exp(2*pi*i/n),
    j = 1..n.  Requires 0 < theta < 2*pi/n so all 2n points are distinct and
    interleave around the circle.
    """
    n = int(n)
    if n < 2:
        raise ThetaOutOfRange("pinwheel needs n >= 2")
    if not (0.0 < theta < 2 * np.pi / n):
        raise ThetaOutOfRange(f"theta must lie strictly between 0 and 2*pi/{n}")
    j = np.arange(1, n + 1)
    alpha = np.exp(2j * np.pi * j / n)
    beta = np.exp(1j * theta) * alpha
    return PointConfig(alpha=alpha, beta=beta)


@dataclass(frozen=True)
class CyclicReduction:
    """Witness that a six-point set factors through a quadratic.

    ``center`` is the common midpoint c, ``images`` the distinct values of
    (q - c)^2, and ``circle`` the circle those images lie on.
    """

    center: complex
    images: tuple
    circle: CircleFit

    def to_dict(self) -> dict:
        return {
            "center": [float(self.center.real), float(self.center.imag)],
            "images": [[float(w.real), float(w.imag)] for w in self.images],
            "circle": self.circle.to_dict(),
        }


def detect_cyclically_reducible_quadratic(
    points: Sequence[complex], tol_mid: float = MIDPOINT_TOL
) -> Optional[CyclicReduction]:
    """Detect whether six points are of the form c + sqrt(P) for concyclic P.

    A candidate center c must be the common midpoint (within ``tol_mid``,
    absolute; normalize the input to unit diameter for scale independence) of
    at least two disjoint point pairs.  The set succeeds when the squared
    differences (q - c)^2 take at most four distinct values lying on a common
    circle.
    """
    q = np.atleast_1d(np.asarray(points, dtype=complex))
    if len(q) != 6:
        raise DegenerateInput("cyclic reducibility check expects exactly 6 points")
    diff = np.abs(q[:, None] - q[None, :])
    np.fill_diagonal(diff, np.inf)
    if diff.min() <= DISTINCTNESS_TOL:
        raise DegenerateInput("repeated points")

    pairs = [(i, j) for i in range(6) for j in range(i + 1, 6)]
    sums = {p: q[p[0]] + q[p[1]] for p in pairs}

    # Candidate centers: average midpoint of any two disjoint pairs whose
    # point sums agree within tolerance.  Discovery order is combinatorial,
    # which keeps the returned center translation-equivariant.
    candidates = []
    for ia, pa in enumerate(pairs):
        for pb in pairs[ia + 1 :]:
            if set(pa) & set(pb):
                continue
            if abs(sums[pa] - sums[pb]) < 2 * tol_mid:
                c = (sums[pa] + sums[pb]) / 4
                if all(abs(c - prev) > tol_mid for prev in candidates):
                    candidates.append(c)

    for c in candidates:
        used = np.zeros(6, dtype=bool)
        images = []
        for i in range(6):
            if used[i]:
                continue
            partner = None
            for j in range(i + 1, 6):
                if not used[j] and abs(q[i] + q[j] - 2 * c) < tol_mid:
                    partner = j
                    break
            if partner is None:
                images.append((q[i] - c) ** 2)
                used[i] = True
            else:
                images.append(((q[i] - c) ** 2 + (q[partner] - c) ** 2) / 2)
                used[i] = used[partner] = True
        if len(images) > 4:
            continue
        fit = is_concyclic(images)
        if fit is not None:
            return CyclicReduction(center=complex(c), images=tuple(images), circle=fit)
    return None


def random_interleaved_config(
    n: int, rng: np.random.Generator, min_gap: Optional[float] = None
) -> PointConfig:
    """Draw a random interleaved unit-circle configuration.

    Angles are rejection-sampled until every cyclic gap exceeds ``min_gap``
    (default 0.3/n).  Nearly colliding points make the nullspace and
    cross-ratio computations arbitrarily ill conditioned, so the floor keeps
    randomized verification sweeps inside their stated tolerances.
    """
    if min_gap is None:
        min_gap = 0.3 / n
    for _ in range(1000):
        angles = np.sort(rng.uniform(0.0, 2 * np.pi, size=2 * n))
        gaps = np.diff(np.concatenate([angles, [angles[0] + 2 * np.pi]]))
        if gaps.min() > min_gap:
            z = np.exp(1j * angles)
            return PointConfig(alpha=z[0::2], beta=z[1::2])
    raise DegenerateInput("failed to sample a well-separated configuration")
