"""Smooth closed plane curves as truncated Fourier series.

A curve is the map t -> sum_k c_k * exp(i*k*t) on [0, 2*pi), stored by its
complex coefficients c_k for integer frequencies |k| <= K.  This encoding
gives exact derivatives (needed by the Newton solver) and a canonical smooth
representative of hand-drawn input.

Validation is numerical and resolution-limited: immersedness is a minimum of
|gamma'| over a dense grid, and simplicity is a pairwise sweep over the
sampled polygon with spatial hashing.  Both are semi-decisions at the
configured resolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Tuple

import numpy as np

from .errors import FitProducesInvalidCurve, TooFewPoints

DEFAULT_BANDWIDTH = 32
DEFAULT_SAMPLES = 2048
IMMERSION_EPS = 1e-6


@dataclass(frozen=True)
class JordanCurve:
    """Truncated Fourier parametrization of a closed plane curve.

    ``coeffs`` maps integer frequency k in [-K, K] to the complex coefficient
    c_k.  Frequencies absent from the map are zero.  Construction does not
    validate smoothness or simplicity; see :func:`validate`.
    """

    coeffs: Mapping[int, complex]
    K: int = DEFAULT_BANDWIDTH

    def __post_init__(self):
        cleaned = {}
        for k, c in self.coeffs.items():
            k = int(k)
            if abs(k) > self.K:
                raise ValueError(f"frequency {k} exceeds bandwidth K={self.K}")
            cleaned[k] = complex(c)
        object.__setattr__(self, "coeffs", cleaned)
        ks = np.array(sorted(cleaned), dtype=int)
        cs = np.array([cleaned[k] for k in sorted(cleaned)], dtype=complex)
        object.__setattr__(self, "_ks", ks)
        object.__setattr__(self, "_cs", cs)

    @property
    def frequencies(self) -> np.ndarray:
        return self._ks

    @property
    def coefficients(self) -> np.ndarray:
        return self._cs

    def to_dict(self) -> dict:
        return {
            "K": self.K,
            "coeffs": [
                {"k": int(k), "re": float(c.real), "im": float(c.imag)}
                for k, c in sorted(self.coeffs.items())
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "JordanCurve":
        coeffs = {int(e["k"]): complex(float(e["re"]), float(e["im"])) for e in data["coeffs"]}
        return cls(coeffs=coeffs, K=int(data["K"]))


def unit_circle() -> JordanCurve:
    return JordanCurve({1: 1.0 + 0.0j}, K=1)


def ellipse(major: float = 1.0, minor_ratio: float = 0.25) -> JordanCurve:
    """Ellipse as c_1 = major, c_{-1} = minor_ratio * major."""
    return JordanCurve({1: major, -1: minor_ratio * major}, K=1)


@dataclass(frozen=True)
class CurveValidationReport:
    immersed: bool
    min_speed: float
    simple: bool
    first_self_intersection: Optional[Tuple[float, float]]
    turning_number: int

    @property
    def valid(self) -> bool:
        return self.immersed and self.simple

    def to_dict(self) -> dict:
        return {
            "immersed": self.immersed,
            "min_speed": self.min_speed,
            "simple": self.simple,
            "first_self_intersection": (
                list(self.first_self_intersection) if self.first_self_intersection else None
            ),
            "turning_number": self.turning_number,
        }


def _dense_weights(curve: JordanCurve, order: int) -> Tuple[np.ndarray, int]:
    """Coefficients (ik)^order c_k on the dense frequency range -K..K."""
    if not len(curve._ks):
        return np.zeros(1, dtype=complex), 0
    kmax = int(np.max(np.abs(curve._ks)))
    dense = np.zeros(2 * kmax + 1, dtype=complex)
    weights = (1j * curve._ks) ** order * curve._cs if order else curve._cs
    dense[curve._ks + kmax] = weights
    return dense, kmax


def _horner_eval(dense: np.ndarray, kmax: int, t) -> np.ndarray:
    """Sum dense[k + kmax] e^{ikt} by Horner on the unit phase.

    One complex exponential per evaluation point; everything else is
    multiply-accumulate, which is what makes the Newton inner loop cheap for
    high-bandwidth curves.
    """
    t = np.asarray(t, dtype=float)
    u = np.exp(1j * t)
    if kmax == 0:
        out = np.broadcast_to(dense[0], t.shape).copy() if t.shape else dense[0]
        return out if t.shape else complex(out)
    v = np.conj(u)  # 1/u for real parameters
    acc_p = np.full_like(u, dense[2 * kmax])
    for k in range(kmax - 1, -1, -1):
        acc_p = acc_p * u + dense[k + kmax]
    acc_n = np.full_like(u, dense[0])
    for k in range(kmax - 1, 0, -1):
        acc_n = acc_n * v + dense[kmax - k]
    out = acc_p + acc_n * v
    return out if out.shape else complex(out)


def evaluate(curve: JordanCurve, t) -> np.ndarray:
    """Evaluate the curve at parameter(s) t.  Linear in the coefficients."""
    dense, kmax = _dense_weights(curve, 0)
    return _horner_eval(dense, kmax, t)


def derivative(curve: JordanCurve, t, order: int = 1):
    """Derivative of the parametrization at t (componentwise (ik)^order c_k)."""
    dense, kmax = _dense_weights(curve, order)
    return _horner_eval(dense, kmax, t)


def _segments_intersect(p1, p2, p3, p4) -> np.ndarray:
    """Vectorized proper-intersection test for segment pairs (complex endpoints)."""

    def cross(o, a, b):
        return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)

    d1 = cross(p3, p4, p1)
    d2 = cross(p3, p4, p2)
    d3 = cross(p1, p2, p3)
    d4 = cross(p1, p2, p4)
    return (d1 * d2 < 0) & (d3 * d4 < 0)


def _simplicity_sweep(points: np.ndarray) -> Optional[Tuple[int, int]]:
    """Find a crossing pair of non-adjacent segments of the closed polygon.

    Returns segment indices (i, j) with i < j, or None when no crossing is
    detected.  Candidate pairs come from a uniform spatial hash keyed on
    segment bounding boxes, so the cost stays near-linear for simple curves.
    """
    n = len(points)
    a = points
    b = np.roll(points, -1)
    seg_len = np.abs(b - a)
    h = max(float(seg_len.max()), 1e-12)

    # Each segment registers in every cell its bbox overlaps (tiny boxes: <= 4 cells).
    cells: dict = {}
    x0 = np.floor(np.minimum(a.real, b.real) / h).astype(int)
    x1 = np.floor(np.maximum(a.real, b.real) / h).astype(int)
    y0 = np.floor(np.minimum(a.imag, b.imag) / h).astype(int)
    y1 = np.floor(np.maximum(a.imag, b.imag) / h).astype(int)
    for i in range(n):
        for cx in range(x0[i], x1[i] + 1):
            for cy in range(y0[i], y1[i] + 1):
                cells.setdefault((cx, cy), []).append(i)

    pairs = set()
    for members in cells.values():
        m = len(members)
        if m < 2:
            continue
        for u in range(m):
            for v in range(u + 1, m):
                i, j = members[u], members[v]
                if i > j:
                    i, j = j, i
                gap = (j - i) % n
                if gap <= 1 or gap == n - 1:
                    continue  # adjacent segments share an endpoint
                pairs.add((i, j))
    if not pairs:
        return None

    idx = np.array(sorted(pairs), dtype=int)
    hit = _segments_intersect(a[idx[:, 0]], b[idx[:, 0]], a[idx[:, 1]], b[idx[:, 1]])
    if not hit.any():
        return None
    first = idx[hit][0]
    return int(first[0]), int(first[1])


def validate(curve: JordanCurve, n_samples: int = DEFAULT_SAMPLES) -> CurveValidationReport:
    """Check immersedness, simplicity, and orientation at grid resolution.

    Failures are reported, not raised.  ``first_self_intersection`` holds the
    parameters of the first crossing segment pair when ``simple`` is False.
    """
    ts = np.linspace(0.0, 2 * np.pi, n_samples, endpoint=False)
    speeds = np.abs(derivative(curve, ts))
    min_speed = float(speeds.min())
    immersed = min_speed > IMMERSION_EPS

    # Winding of gamma' over one period, by phase unwrapping on the closed grid.
    ts_closed = np.linspace(0.0, 2 * np.pi, n_samples + 1)
    d = derivative(curve, ts_closed)
    safe = np.where(np.abs(d) > 0, d, 1.0)
    phases = np.unwrap(np.angle(safe))
    turning = int(np.round((phases[-1] - phases[0]) / (2 * np.pi)))

    crossing = _simplicity_sweep(evaluate(curve, ts))
    if crossing is None:
        simple, first = True, None
    else:
        simple, first = False, (float(ts[crossing[0]]), float(ts[crossing[1]]))

    return CurveValidationReport(
        immersed=immersed,
        min_speed=min_speed,
        simple=simple,
        first_self_intersection=first,
        turning_number=turning,
    )


def _trig_interpolant_eval(samples: np.ndarray, ts: np.ndarray, deriv: bool = False) -> np.ndarray:
    """Evaluate the band-limited interpolant of uniform samples at arbitrary ts."""
    m = len(samples)
    coeffs = np.fft.fft(samples) / m
    ks = np.fft.fftfreq(m, d=1.0 / m)  # integer frequencies, fftfreq order
    if m % 2 == 0:
        # Split the ambiguous Nyquist mode evenly between +m/2 and -m/2 so the
        # interpolant stays smooth for real and complex data alike.
        ny = np.argmin(np.abs(ks + m // 2))
        ks = np.concatenate([ks, [m // 2]])
        coeffs = np.concatenate([coeffs, [coeffs[ny] / 2]])
        coeffs[ny] /= 2
    weights = coeffs * (1j * ks) if deriv else coeffs
    out = np.empty(len(ts), dtype=complex)
    step = 512
    for lo in range(0, len(ts), step):
        chunk = ts[lo : lo + step]
        out[lo : lo + step] = np.exp(1j * chunk[:, None] * ks) @ weights
    return out


def fit_from_polyline(
    points: Sequence[Sequence[float]],
    K: int = DEFAULT_BANDWIDTH,
    n_samples: int = DEFAULT_SAMPLES,
) -> JordanCurve:
    """Fit a curve through a closed polygonal loop.

    The loop (first point != last; closure implied) is interpreted as uniform
    samples of a periodic path, interpolated band-limitedly, resampled
    uniformly by arc length, and Fourier-analyzed keeping |k| <= K.  Exact
    uniform samples of a bandwidth <= K/2 constant-speed curve round-trip to
    high accuracy.

    Raises TooFewPoints for short input and FitProducesInvalidCurve when the
    fitted curve fails :func:`validate`.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise TooFewPoints("polyline must be a list of [x, y] points")
    z = pts[:, 0] + 1j * pts[:, 1]
    if len(z) > 1 and abs(z[0] - z[-1]) < 1e-12:
        z = z[:-1]
    if len(z) < 8:
        raise TooFewPoints(f"need at least 8 points, got {len(z)}")

    # Arc length of the interpolant on a dense grid, then inversion by
    # monotone linear interpolation.
    dense = max(4 * n_samples, 4 * len(z))
    tg = np.linspace(0.0, 2 * np.pi, dense + 1)
    speed = np.abs(_trig_interpolant_eval(z, tg, deriv=True))
    seg = 0.5 * (speed[1:] + speed[:-1]) * np.diff(tg)
    s = np.concatenate([[0.0], np.cumsum(seg)])
    total = s[-1]
    if total <= 0:
        raise FitProducesInvalidCurve("degenerate polyline with zero length")
    targets = np.linspace(0.0, total, n_samples, endpoint=False)
    t_resampled = np.interp(targets, s, tg)
    resampled = _trig_interpolant_eval(z, t_resampled)

    spectrum = np.fft.fft(resampled) / n_samples
    freqs = np.fft.fftfreq(n_samples, d=1.0 / n_samples).astype(int)
    kmax = min(K, n_samples // 2 - 1)
    keep = np.abs(freqs) <= kmax
    coeffs = {int(k): complex(c) for k, c in zip(freqs[keep], spectrum[keep])}
    curve = JordanCurve(coeffs, K=K)

    report = validate(curve, n_samples=n_samples)
    if not report.valid:
        raise FitProducesInvalidCurve("fitted curve fails validation", report=report)
    return curve


def polyline_from_dict(data: dict) -> np.ndarray:
    pts = data.get("points")
    if pts is None:
        raise TooFewPoints("polyline JSON must contain a 'points' array")
    return np.asarray(pts, dtype=float)


def curve_through_points(points: Sequence[complex]) -> JordanCurve:
    """Minimal-bandwidth closed curve passing exactly through ordered points.

    Point j is hit at parameter 2*pi*j/m.  The result is the band-limited
    interpolant (K = m // 2); no validation is performed here, so callers
    planting test data should validate and resample on failure.
    """
    w = np.atleast_1d(np.asarray(points, dtype=complex))
    m = len(w)
    if m < 3:
        raise TooFewPoints("need at least 3 points to thread a closed curve")
    spectrum = np.fft.fft(w) / m
    freqs = np.fft.fftfreq(m, d=1.0 / m).astype(int)
    coeffs = {int(k): complex(c) for k, c in zip(freqs, spectrum)}
    return JordanCurve(coeffs, K=max(abs(freqs.min()), abs(freqs.max())))
