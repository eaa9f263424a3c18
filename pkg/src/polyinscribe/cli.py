"""Command line front door.

Subcommands: solve (alias: inscribe), verify, pinwheel, reduce, cassini,
serve.  Exit codes: 0 success, 1 input or operational error, 2 verification
failure, 3 solve completed but found no inscriptions.  All randomized paths
are seeded, so identical invocations print identical reports.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .config import detect_cyclically_reducible_quadratic, make_pinwheel
from .errors import InscribeError, ThetaOutOfRange
from .formats import parse_config, parse_curve
from .plot import render_svg
from .solver import SolveOptions, find_inscriptions, fit_cassini
from .verify import SUITES, run_suites

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VERIFY_FAILED = 2
EXIT_NO_INSCRIPTIONS = 3


def _threads_from_env() -> int:
    raw = os.environ.get("INSCRIBE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _load_json(path: str, what: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise ValueError(f"{what} file not found: {path}")
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON in {what} file {path}: {exc}")


def _cmd_solve(args) -> int:
    curve = parse_curve(_load_json(args.curve, "curve"))
    config = parse_config(_load_json(args.config, "config"))
    if args.degree is not None and args.degree != config.n - 1:
        raise ValueError(
            f"degree {args.degree} does not match the configuration "
            f"(2n = {2 * config.n} points implies degree {config.n - 1})"
        )
    opts = SolveOptions(
        n_starts=args.n_starts,
        seed=args.seed,
        threads=_threads_from_env(),
        residual_tol=args.tol,
    )
    report = find_inscriptions(curve, config, opts)
    payload = report.to_dict()
    if args.json:
        print(json.dumps(payload, indent=None, sort_keys=True))
    else:
        print(f"inscriptions found: {len(report.inscriptions)}")
        for ins in report.inscriptions[:10]:
            coeffs = ", ".join(f"{a.real:+.6f}{a.imag:+.6f}i" for a in ins.poly.coeffs)
            print(f"  [{coeffs}]  residual {ins.residual:.2e}")
        if len(report.inscriptions) > 10:
            print(f"  ... and {len(report.inscriptions) - 10} more")
        print(
            f"starts {report.n_starts}, converged {report.n_converged}, "
            f"constants discarded {report.n_constant_discarded}, "
            f"{report.wall_time_s:.2f}s"
        )
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(render_svg(curve, config, report.inscriptions))
    return EXIT_OK if report.inscriptions else EXIT_NO_INSCRIPTIONS


def _cmd_verify(args) -> int:
    result = run_suites(args.suite, n_trials=args.n_trials, seed=args.seed)
    if args.json:
        print(json.dumps(result, sort_keys=True))
    else:
        for row in result["rows"]:
            status = "PASS" if row["passed"] else "FAIL"
            print(
                f"[{status}] {row['suite']:10s} {row['name']:45s} "
                f"measured={row['measured']:.3e} tol={row['tolerance']:.1e}"
            )
        print("all passed" if result["passed"] else "FAILURES present")
    return EXIT_OK if result["passed"] else EXIT_VERIFY_FAILED


def _cmd_pinwheel(args) -> int:
    config = make_pinwheel(args.n, args.theta)
    print(json.dumps(config.to_dict()))
    return EXIT_OK


def _cmd_reduce(args) -> int:
    config = parse_config(_load_json(args.config, "config"))
    pts = config.points
    if len(pts) != 6:
        raise ValueError("cyclic reduction analysis needs exactly 6 points")
    result = detect_cyclically_reducible_quadratic(pts)
    payload = {"reducible": result is not None}
    if result is not None:
        payload.update(result.to_dict())
    print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


def _cmd_cassini(args) -> int:
    config = parse_config(_load_json(args.config, "config"))
    pts = config.points
    if len(pts) != 6:
        raise ValueError("Cassini analysis needs exactly 6 points")
    fit = fit_cassini(pts)
    payload = {"fits": fit is not None}
    if fit is not None:
        payload.update(fit.to_dict())
    print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    port = args.port or int(os.environ.get("INSCRIBE_PORT", "8080"))
    uvicorn.run(app, host=args.host, port=port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inscribe",
        description="Polynomial inscriptions of point sets into smooth Jordan curves.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", aliases=["inscribe"], help="find inscriptions")
    p.add_argument("--curve", required=True, help="curve JSON file")
    p.add_argument("--config", required=True, help="configuration JSON file")
    p.add_argument("-d", "--degree", type=int, default=None, help="polynomial degree (consistency check)")
    p.add_argument("--n-starts", type=int, default=None, help="multistart budget (default 2000 * n)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-8, help="residual acceptance tolerance")
    p.add_argument("--json", action="store_true", help="machine readable output")
    p.add_argument("--svg", metavar="OUT", default=None, help="write an SVG rendering")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("-n", "--n-trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("pinwheel", help="emit a pinwheel configuration")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-t", "--theta", type=float, required=True)
    p.set_defaults(fn=_cmd_pinwheel)

    p = sub.add_parser("reduce", help="cyclic reducibility analysis of 6 points")
    p.add_argument("config", help="configuration JSON file")
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("cassini", help="Cassini oval fit of 6 points")
    p.add_argument("config", help="configuration JSON file")
    p.set_defaults(fn=_cmd_cassini)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=None, help="default from INSCRIBE_PORT or 8080")
    p.set_defaults(fn=_cmd_serve)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0].startswith("-") and argv[0] not in ("-h", "--help", "--version"):
        argv = ["solve"] + argv
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ThetaOutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except InscribeError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
