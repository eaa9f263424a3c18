"""Stateless HTTP JSON API for the explorer UI and scripted clients.

Every numeric answer the UI renders comes from here; clients hold all
session state.  Identical request bodies (seeds included) produce identical
response bodies.  Long solves honor a per-request deadline and come back
flagged "truncated"; soundness of whatever is returned is unconditional.

Error mapping: structurally malformed bodies give 400, mathematically
invalid inputs give 422 with the library error code, and concurrent solves
beyond the configured cap are shed with 503.
"""

from __future__ import annotations

import dataclasses
import os
import threading

import numpy as np
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__
from .config import is_concyclic, make_pinwheel
from .curves import fit_from_polyline, polyline_from_dict, validate
from .errors import InscribeError
from .formats import parse_config, parse_curve, parse_solve_options
from .interp import build_transfer
from .solver import find_inscriptions
from .symplectic import cross_ratio_oracle, diagonal_forms, pullback_residual
from .verify import run_suites

MAX_N = 8
MAX_STARTS = 1_000_000
DEFAULT_DEADLINE_S = 30.0
MAX_CONCURRENT_SOLVES = int(os.environ.get("INSCRIBE_MAX_CONCURRENT", "4"))

app = FastAPI(title="polyinscribe", version=__version__)
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)

_solve_slots = threading.Semaphore(MAX_CONCURRENT_SOLVES)


def _error(status: int, code: str, message: str, detail=None) -> JSONResponse:
    body = {"code": code, "message": message}
    if detail is not None:
        body["detail"] = detail
    return JSONResponse(status_code=status, content=body)


@app.exception_handler(InscribeError)
async def _inscribe_error(request: Request, exc: InscribeError):
    detail = None
    report = getattr(exc, "report", None)
    if report is not None:
        detail = report.to_dict()
    return _error(422, exc.code, str(exc), detail)


@app.exception_handler(ValueError)
async def _value_error(request: Request, exc: ValueError):
    return _error(400, "BadRequest", str(exc))


@app.get("/healthz")
async def healthz():
    return {"status": "ok", "name": "polyinscribe", "version": __version__}


def _reference_circle(config) -> np.ndarray:
    """Sampled circle through (or near) the configuration, for rendering."""
    try:
        fit = is_concyclic(config.points)
    except InscribeError:
        fit = None
    if fit is not None:
        center, radius = fit.center, fit.radius
    else:
        center = complex(np.mean(config.points))
        radius = float(np.mean(np.abs(config.points - center)))
    ts = np.linspace(0, 2 * np.pi, 96, endpoint=False)
    return center + radius * np.exp(1j * ts)


def _inscription_payload(ins, config, reference: np.ndarray) -> dict:
    out = ins.to_dict()
    images = ins.poly(config.points)
    out["image_points"] = [[float(w.real), float(w.imag)] for w in images]
    image_circle = ins.poly(reference)
    out["circle_image"] = [[float(w.real), float(w.imag)] for w in image_circle]
    return out


@app.post("/api/solve")
async def api_solve(request: Request):
    body = await request.json()
    if not isinstance(body, dict):
        raise ValueError("request body must be a JSON object")
    curve = parse_curve(body.get("curve") or {})
    config = parse_config(body.get("config") or {})
    if config.n > MAX_N:
        return _error(422, "TooManyPoints", f"n = {config.n} exceeds the limit {MAX_N}")
    degree = body.get("degree")
    if degree is not None and int(degree) != config.n - 1:
        return _error(
            422,
            "DegreeMismatch",
            f"degree {degree} does not match 2n = {2 * config.n} points",
        )
    opts = parse_solve_options(body.get("opts"), threads=1)
    if opts.n_starts is not None and opts.n_starts > MAX_STARTS:
        return _error(422, "TooManyStarts", f"n_starts exceeds the limit {MAX_STARTS}")
    if opts.time_budget_s is None:
        opts = dataclasses.replace(opts, time_budget_s=DEFAULT_DEADLINE_S)

    if not _solve_slots.acquire(blocking=False):
        return _error(503, "Overloaded", "too many concurrent solves; retry shortly")
    try:
        report = find_inscriptions(curve, config, opts)
    finally:
        _solve_slots.release()

    payload = report.to_dict()
    reference = _reference_circle(config)
    payload["inscriptions"] = [
        _inscription_payload(i, config, reference) for i in report.inscriptions
    ]
    return payload


@app.post("/api/curve/fit")
async def api_curve_fit(request: Request):
    body = await request.json()
    if not isinstance(body, dict):
        raise ValueError("request body must be a JSON object")
    points = polyline_from_dict(body)
    K = int(body.get("K", 32))
    curve = fit_from_polyline(points, K=K)
    report = validate(curve)
    return {"curve": curve.to_dict(), "report": report.to_dict()}


@app.get("/api/pinwheel")
async def api_pinwheel(n: int, theta: float):
    return make_pinwheel(n, theta).to_dict()


@app.post("/api/verify")
async def api_verify(request: Request):
    body = await request.json()
    if not isinstance(body, dict):
        raise ValueError("request body must be a JSON object")
    suite = body.get("suite", "all")
    n_trials = body.get("n_trials")
    seed = int(body.get("seed", 0))
    return run_suites(suite, n_trials=int(n_trials) if n_trials else None, seed=seed)


@app.post("/api/reduce")
async def api_reduce(request: Request):
    body = await request.json()
    if not isinstance(body, dict):
        raise ValueError("request body must be a JSON object")
    config = parse_config(body.get("config") or body)
    pts = config.points
    if len(pts) != 6:
        return _error(422, "DegenerateInput", "cyclic reduction analysis needs exactly 6 points")
    from .config import detect_cyclically_reducible_quadratic

    result = detect_cyclically_reducible_quadratic(pts)
    payload = {"reducible": result is not None}
    if result is not None:
        payload.update(result.to_dict())
    return payload


@app.post("/api/cassini")
async def api_cassini(request: Request):
    body = await request.json()
    if not isinstance(body, dict):
        raise ValueError("request body must be a JSON object")
    config = parse_config(body.get("config") or body)
    pts = config.points
    if len(pts) != 6:
        return _error(422, "DegenerateInput", "Cassini analysis needs exactly 6 points")
    from .solver import fit_cassini

    fit = fit_cassini(pts)
    payload = {"fits": fit is not None}
    if fit is not None:
        payload.update(fit.to_dict())
    return payload


@app.post("/api/forms")
async def api_forms(request: Request):
    body = await request.json()
    if not isinstance(body, dict):
        raise ValueError("request body must be a JSON object")
    config = parse_config(body.get("config") or body)
    forms = diagonal_forms(config)
    lam_o, mu_o = cross_ratio_oracle(config)
    lam_r = forms.lambda_pos / forms.mu_pos[-1]
    mu_r = forms.mu_pos / forms.mu_pos[-1]
    mismatch = max(
        float(np.max(np.abs(lam_r - lam_o) / np.abs(lam_o))),
        float(np.max(np.abs(mu_r - mu_o) / np.abs(mu_o))),
    )
    payload = forms.to_dict()
    payload["oracle"] = {
        "lambda_over_mu_n": [float(v) for v in lam_o],
        "mu_over_mu_n": [float(v) for v in mu_o],
        "max_rel_mismatch": mismatch,
    }
    payload["pullback_residual"] = pullback_residual(forms, build_transfer(config))
    return payload


def main():  # pragma: no cover
    import uvicorn

    port = int(os.environ.get("INSCRIBE_PORT", "8080"))
    uvicorn.run(app, host="0.0.0.0", port=port, log_level="warning")


if __name__ == "__main__":  # pragma: no cover
    main()
