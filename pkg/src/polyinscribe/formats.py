"""JSON wire formats shared by the CLI and the HTTP service.

Parsing raises the library's own error types for mathematically invalid
content and ValueError (with the offending field named) for structurally
malformed documents, so both front ends can map failures consistently.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .config import PointConfig
from .curves import JordanCurve
from .solver import SolveOptions, SolveReport


def _require(data: dict, field: str, kind, where: str):
    if field not in data:
        raise ValueError(f"missing field '{field}' in {where}")
    value = data[field]
    if kind is not None and not isinstance(value, kind):
        raise ValueError(f"field '{field}' in {where} has the wrong type")
    return value


def parse_curve(data: dict) -> JordanCurve:
    if not isinstance(data, dict):
        raise ValueError("curve document must be a JSON object")
    K = _require(data, "K", int, "curve")
    entries = _require(data, "coeffs", list, "curve")
    coeffs = {}
    for i, e in enumerate(entries):
        if not isinstance(e, dict):
            raise ValueError(f"entry {i} of 'coeffs' must be an object with k/re/im")
        try:
            coeffs[int(e["k"])] = complex(float(e["re"]), float(e["im"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"entry {i} of 'coeffs' is malformed: {exc}") from exc
    return JordanCurve(coeffs=coeffs, K=K)


def parse_config(data: dict) -> PointConfig:
    if not isinstance(data, dict):
        raise ValueError("config document must be a JSON object")
    if "alpha" in data or "beta" in data:
        a = _require(data, "alpha", list, "config")
        b = _require(data, "beta", list, "config")
        try:
            aa = np.asarray(a, dtype=float)
            bb = np.asarray(b, dtype=float)
            return PointConfig(alpha=aa[:, 0] + 1j * aa[:, 1], beta=bb[:, 0] + 1j * bb[:, 1])
        except (IndexError, ValueError) as exc:
            raise ValueError(f"field 'alpha'/'beta' in config is malformed: {exc}") from exc
    if "points" in data:
        return PointConfig.from_dict(data)
    raise ValueError("missing field 'alpha'/'beta' (or 'points') in config")


def parse_solve_options(data: Optional[dict], threads: int = 1) -> SolveOptions:
    data = data or {}
    known = {"n_starts", "seed", "deadline_s"}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown field '{sorted(unknown)[0]}' in opts")
    return SolveOptions(
        n_starts=int(data["n_starts"]) if "n_starts" in data else None,
        seed=int(data.get("seed", 0)),
        time_budget_s=float(data["deadline_s"]) if "deadline_s" in data else None,
        threads=threads,
    )


def report_to_dict(report: SolveReport, include_wall_time: bool = True) -> dict:
    return report.to_dict(include_wall_time=include_wall_time)
