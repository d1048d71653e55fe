"""Command-line interface.

Subcommands
-----------

* ``classify``   flags for one channel ``(tau, y)``
* ``threshold``  no-cloning threshold and minimal A->B budget
* ``optimal``    optimal channel, fidelity, and resource for a budget
* ``resource``   minimal-energy boundary resource at a transmissivity
* ``verify``     Monte Carlo cross-check of the closed-form fidelity
* ``contour``    figure-data exports (CSV or JSON)

Exit codes: 0 success, 2 validation error, 3 divergent-energy refusal,
4 I/O error.  ``--format json`` emits one stable JSON object per run;
the default seed for ``verify`` comes from ``CVTELEPORT_SEED``.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import CVTeleportError, DivergentEnergyError
from .channels import classify
from .contour import (
    Axis,
    build_fig1,
    build_fig2,
    fig1_rows,
    fig2_rows,
    FIG1_COLUMNS,
    FIG2_COLUMNS,
    SCHEMA_VERSION,
)
from .fidelity import (
    f_opt,
    is_secure,
    no_cloning_threshold,
    optimal_channel,
    s_ab_min,
    security_report,
)
from .gaussian import Direction, steerability
from .montecarlo import RngStream, mc_channel_fidelity
from .teleport import (
    cross_steerability,
    optimal_resource_fixed_sab,
    optimal_resource_fixed_sba,
    transmissivity_window,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_DIVERGENT = 3
EXIT_IO = 4

SEED_ENV = "CVTELEPORT_SEED"


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError as exc:
        raise CVTeleportError(f"{SEED_ENV} must be an integer, got {raw!r}") from exc


def _emit(payload: dict, fmt: str, out) -> None:
    from .serialize import json_dumps

    if fmt == "json":
        out.write(json_dumps(payload))
        return
    for key, value in payload.get("data", payload).items():
        _emit_text(key, value, out)


def _emit_text(key, value, out, prefix="") -> None:
    from .serialize import fmt_number

    label = f"{prefix}{key}"
    if isinstance(value, dict):
        for sub, item in value.items():
            _emit_text(sub, item, out, prefix=f"{label}.")
    elif value is None:
        out.write(f"{label}: null\n")
    elif isinstance(value, str):
        out.write(f"{label}: {value}\n")
    else:
        out.write(f"{label}: {fmt_number(value)}\n")


def _payload(command: str, params: dict, data: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": params,
        "data": data,
    }


def _resource_dict(spec) -> dict:
    state = spec.state()
    return {
        "a": spec.a,
        "b": spec.b,
        "c": spec.c,
        "g": spec.g,
        "direction": spec.direction.value,
        "steering": spec.steering,
        "energy": spec.energy,
        "cross_steerability": cross_steerability(spec),
        "s_ba": steerability(state, Direction.B_TO_A),
        "s_ab": steerability(state, Direction.A_TO_B),
        "induced_tau": spec.g * spec.g,
        "induced_y": spec.induced().y,
    }


def cmd_classify(args, out) -> int:
    flags = classify(args.tau, args.y)
    payload = _payload(
        "classify",
        {"tau": args.tau, "y": args.y},
        {
            "unphysical": flags.unphysical,
            "entanglement_breaking": flags.entanglement_breaking,
            "sb_b_to_a": flags.sb_b_to_a,
            "sb_a_to_b": flags.sb_a_to_b,
            "tag": flags.tag,
        },
    )
    _emit(payload, args.format, out)
    return EXIT_OK


def cmd_threshold(args, out) -> int:
    payload = _payload(
        "threshold",
        {"lambda": args.lam},
        {
            "no_cloning_threshold": no_cloning_threshold(args.lam),
            "s_ab_min": s_ab_min(args.lam),
        },
    )
    _emit(payload, args.format, out)
    return EXIT_OK


def cmd_optimal(args, out) -> int:
    direction = Direction(args.direction)
    tau, y, clamped = optimal_channel(args.lam, args.steering, direction)
    best = f_opt(args.lam, args.steering, direction)
    threshold = no_cloning_threshold(args.lam)
    data = {
        "tau_opt": tau,
        "y_boundary": y,
        "f_opt": best,
        "threshold": threshold,
        "secure": is_secure(best, threshold),
        "resource": None,
        "note": None,
    }
    params = {
        "lambda": args.lam,
        "direction": direction.value,
        "steering": args.steering,
    }
    if clamped:
        data["note"] = (
            "optimal transmissivity sits at the quantum-limited endpoint of "
            "the resource window; the minimal resource has divergent energy"
        )
        payload = _payload("optimal", params, data)
        payload["error"] = {"type": "divergent-energy", "reason": data["note"]}
        _emit(payload, args.format, out)
        return EXIT_DIVERGENT
    if args.steering <= 0.0:
        data["note"] = (
            "zero steering budget: the boundary family is defined for s > 0, "
            "no finite resource is emitted"
        )
    else:
        spec = (
            optimal_resource_fixed_sba(tau, args.steering)
            if direction is Direction.B_TO_A
            else optimal_resource_fixed_sab(tau, args.steering)
        )
        data["resource"] = _resource_dict(spec)
    _emit(_payload("optimal", params, data), args.format, out)
    return EXIT_OK


def cmd_resource(args, out) -> int:
    direction = Direction(args.direction)
    spec = (
        optimal_resource_fixed_sba(args.tau, args.steering)
        if direction is Direction.B_TO_A
        else optimal_resource_fixed_sab(args.tau, args.steering)
    )
    lo, hi = transmissivity_window(direction, args.steering)
    payload = _payload(
        "resource",
        {
            "tau": args.tau,
            "direction": direction.value,
            "steering": args.steering,
            "window": {"lo": lo, "hi": hi},
        },
        {"resource": _resource_dict(spec)},
    )
    _emit(payload, args.format, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    report = security_report(args.tau, args.y, args.lam)
    estimate = mc_channel_fidelity(
        args.tau, args.y, args.lam, args.n, RngStream(seed)
    )
    agrees = abs(estimate.mean - report.f_avg) <= 4.0 * estimate.std_error + 1e-12
    payload = _payload(
        "verify",
        {
            "tau": args.tau,
            "y": args.y,
            "lambda": args.lam,
            "n": args.n,
            "seed": seed,
        },
        {
            "f_avg": report.f_avg,
            "threshold": report.threshold,
            "secure": report.secure,
            "mc": {
                "mean": estimate.mean,
                "std_error": estimate.std_error,
                "n": estimate.n,
                "seed": estimate.seed,
            },
            "agrees": agrees,
        },
    )
    _emit(payload, args.format, out)
    return EXIT_OK


_FIG1_DEFAULTS = {"fig1a": 0.4, "fig1b": 0.6}


def cmd_contour(args, out) -> int:
    kind = args.kind
    if kind in _FIG1_DEFAULTS:
        lam = args.lam if args.lam is not None else 0.2
        steering = (
            args.steering if args.steering is not None else _FIG1_DEFAULTS[kind]
        )
        x_axis = Axis(
            args.x_min if args.x_min is not None else 0.0,
            args.x_max if args.x_max is not None else 2.0,
            args.x_step if args.x_step is not None else 0.005,
        )
        y_axis = Axis(
            args.y_min if args.y_min is not None else 0.0,
            args.y_max if args.y_max is not None else 2.0,
            args.y_step if args.y_step is not None else 0.005,
        )
        export = build_fig1(kind, lam, steering, x_axis, y_axis)
        rows = fig1_rows(export)
        columns = FIG1_COLUMNS
    else:
        x_axis = Axis(
            args.x_min if args.x_min is not None else 0.005,
            args.x_max if args.x_max is not None else 2.0,
            args.x_step if args.x_step is not None else 0.005,
        )
        y_axis = Axis(
            args.y_min if args.y_min is not None else 0.0,
            args.y_max if args.y_max is not None else 3.0,
            args.y_step if args.y_step is not None else 0.005,
        )
        export = build_fig2(kind, x_axis, y_axis)
        rows = fig2_rows(export)
        columns = FIG2_COLUMNS

    fmt = args.format
    if fmt is None and args.out is not None:
        suffix = args.out.rsplit(".", 1)[-1].lower()
        fmt = suffix if suffix in ("csv", "json") else None
    if fmt is None:
        fmt = "csv"

    from .serialize import csv_dumps, json_dumps

    text = json_dumps(export) if fmt == "json" else csv_dumps(columns, rows)
    if args.out is None:
        out.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return EXIT_OK


def _add_format(parser) -> None:
    parser.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="output rendering (default: text)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cvteleport",
        description=(
            "Steering-constrained optimal secure teleportation of "
            "coherent-state alphabets"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a phase-insensitive channel")
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("threshold", help="no-cloning threshold for an alphabet")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("optimal", help="optimal channel under a steering budget")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--direction", choices=("ba", "ab"), required=True)
    p.add_argument("--steering", type=float, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_optimal)

    p = sub.add_parser("resource", help="minimal boundary resource at tau")
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--direction", choices=("ba", "ab"), required=True)
    p.add_argument("--steering", type=float, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_resource)

    p = sub.add_parser("verify", help="Monte Carlo check of the fidelity formula")
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--n", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=None,
                   help=f"defaults to ${SEED_ENV} or 0")
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("contour", help="figure-data export (CSV or JSON)")
    p.add_argument("--kind", choices=("fig1a", "fig1b", "fig2a", "fig2b"),
                   required=True)
    p.add_argument("--lambda", dest="lam", type=float, default=None)
    p.add_argument("--steering", type=float, default=None)
    p.add_argument("--x-min", type=float, default=None)
    p.add_argument("--x-max", type=float, default=None)
    p.add_argument("--x-step", type=float, default=None)
    p.add_argument("--y-min", type=float, default=None)
    p.add_argument("--y-max", type=float, default=None)
    p.add_argument("--y-step", type=float, default=None)
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default=None,
                   help="default: inferred from --out extension, else csv")
    p.set_defaults(func=cmd_contour)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_VALIDATION if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args, sys.stdout)
    except DivergentEnergyError as exc:
        sys.stderr.write(f"error: divergent-energy: {exc}\n")
        return EXIT_DIVERGENT
    except CVTeleportError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VALIDATION
    except (ValueError, TypeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VALIDATION
    except OSError as exc:
        sys.stderr.write(f"error: i/o: {exc}\n")
        return EXIT_IO


def run() -> None:
    sys.exit(main())
