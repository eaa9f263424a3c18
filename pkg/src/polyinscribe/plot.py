"""Deterministic SVG rendering of curves, point sets, and solutions.

Output is plain SVG text with fixed float formatting so golden files diff
cleanly.  Layers: the curve, the two point tuples, the image points of each
inscription, and a text annotation block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .config import PointConfig
from .curves import JordanCurve, evaluate
from .solver import Inscription

DEFAULT_LAYERS = ("curve", "points", "images", "annotations")


@dataclass(frozen=True)
class PlotSpec:
    width: int = 640
    height: int = 640
    layers: Tuple[str, ...] = DEFAULT_LAYERS
    margin: float = 0.08
    curve_samples: int = 512


def _fmt(x: float) -> str:
    return f"{x:.4f}"


class _Mapper:
    """Data rectangle to pixel rectangle, preserving aspect ratio."""

    def __init__(self, xs, ys, spec: PlotSpec):
        x0, x1 = float(np.min(xs)), float(np.max(xs))
        y0, y1 = float(np.min(ys)), float(np.max(ys))
        span = max(x1 - x0, y1 - y0, 1e-9)
        pad = spec.margin * span
        self.x0, self.y0, self.span = x0 - pad, y0 - pad, span + 2 * pad
        self.w, self.h = spec.width, spec.height

    def map(self, z: complex) -> Tuple[float, float]:
        scale = min(self.w, self.h) / self.span
        return ((z.real - self.x0) * scale, self.h - (z.imag - self.y0) * scale)


def render_svg(
    curve: Optional[JordanCurve] = None,
    config: Optional[PointConfig] = None,
    inscriptions: Sequence[Inscription] = (),
    spec: Optional[PlotSpec] = None,
) -> str:
    spec = spec or PlotSpec()

    pts: List[complex] = []
    curve_pts = None
    if curve is not None:
        ts = np.linspace(0, 2 * np.pi, spec.curve_samples, endpoint=False)
        curve_pts = evaluate(curve, ts)
        pts.extend(curve_pts)
    if config is not None:
        pts.extend(config.points)
    for ins in inscriptions:
        if config is not None:
            pts.extend(ins.poly(config.points))
    if not pts:
        pts = [0j, 1 + 1j]
    arr = np.asarray(pts, dtype=complex)
    m = _Mapper(arr.real, arr.imag, spec)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" '
        f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">',
        f'<rect width="{spec.width}" height="{spec.height}" fill="white"/>',
    ]

    if curve_pts is not None and "curve" in spec.layers:
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (m.map(z) for z in curve_pts))
        out.append(
            f'<polygon points="{coords}" fill="none" stroke="#1f4e79" stroke-width="1.5"/>'
        )

    if config is not None and "points" in spec.layers:
        for z in config.alpha:
            x, y = m.map(z)
            out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="#c0392b"/>')
        for z in config.beta:
            x, y = m.map(z)
            out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="#27ae60"/>')

    if config is not None and "images" in spec.layers:
        for ins in inscriptions:
            for w in ins.poly(config.points):
                x, y = m.map(w)
                out.append(
                    f'<path d="M {_fmt(x - 4)} {_fmt(y)} L {_fmt(x + 4)} {_fmt(y)} '
                    f'M {_fmt(x)} {_fmt(y - 4)} L {_fmt(x)} {_fmt(y + 4)}" '
                    f'stroke="#8e44ad" stroke-width="1.2"/>'
                )

    if "annotations" in spec.layers:
        lines = [f"inscriptions: {len(inscriptions)}"]
        for i, ins in enumerate(inscriptions[:6]):
            cs = ", ".join(
                f"{a.real:+.4f}{a.imag:+.4f}i" for a in ins.poly.coeffs
            )
            lines.append(f"p{i}: [{cs}]  residual {ins.residual:.1e}")
        for row, text in enumerate(lines):
            out.append(
                f'<text x="8" y="{16 + 14 * row}" font-family="monospace" '
                f'font-size="11" fill="#333">{text}</text>'
            )

    out.append("</svg>")
    return "\n".join(out)
