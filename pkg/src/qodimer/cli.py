"""simctl: command-line front end.

All frequencies and rates are plain numbers interpreted in units of the qubit
frequency (the presets set omega0 = 1); times are in 1/omega0.  SIMCTL_THREADS
caps the size of the worker pool used for independent runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .config import apply_overrides, load_config_file, resolve
from .errors import QodimerError
from .params import ModelParams
from .presets import PARAMS_PRESETS, RUN_PRESETS
from .runner import run_compare, run_params_table, run_timeseries

_EPILOG = (
    "Units: omega0 = 1 by convention; every rate/frequency is in units of the "
    "qubit frequency and times in its inverse.  SIMCTL_THREADS limits worker "
    "parallelism (default: CPU count)."
)


def _parse_lambda_grid(text: str) -> np.ndarray:
    try:
        a, b, n = text.split(":")
        grid = np.linspace(float(a), float(b), int(n))
    except ValueError as exc:
        raise QodimerError(f"--lambda must look like start:stop:count, got {text!r}") from exc
    if grid.size < 1:
        raise QodimerError("--lambda needs at least one point")
    return grid


def _config_sources(args) -> tuple[dict, str | None, dict]:
    doc = load_config_file(args.config) if args.config else {}
    overrides = apply_overrides(args.override or [])
    return doc, args.preset, overrides


def _cmd_params(args) -> int:
    preset = PARAMS_PRESETS[args.preset]
    overrides = apply_overrides(args.override or [])
    merged = {**preset, **overrides}
    if args.lambda_grid:
        grid = _parse_lambda_grid(args.lambda_grid)
    else:
        grid = np.linspace(
            float(merged["lambda_start"]), float(merged["lambda_stop"]), int(merged["lambda_points"])
        )
    base = ModelParams(
        omega0=float(merged["omega0"]), omega=float(merged["omega"]),
        g=float(merged["g"]), lam=0.0, mu=float(merged["mu"]),
    )
    table = run_params_table(grid, base)
    out = table.write_csv(args.out)
    print(f"wrote {out}")
    return 0


def _cmd_sweep(args) -> int:
    args.preset = "fig2"
    args.lambda_grid = args.lambda_grid or "0:0.49:99"
    return _cmd_params(args)


def _cmd_evolve(args) -> int:
    doc, preset, overrides = _config_sources(args)
    configs = resolve(doc, preset=preset, overrides=overrides)
    series = run_timeseries(configs)
    out = series.write_csv(args.out)
    print(f"wrote {out} ({series.axis.size} rows, {len(series.columns)} columns)")
    return 0


def _cmd_compare(args) -> int:
    doc, preset, overrides = _config_sources(args)
    configs = resolve(doc, preset=preset, overrides=overrides)
    if len(configs) != 1:
        raise QodimerError("compare runs on a single config, not a bundle preset")
    report = run_compare(configs[0])
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text + "\n")
        print(f"wrote {args.out}")
    else:
        print(text)
    print(f"status: {report['status']}")
    if report["status"] == "pass":
        return 0
    return 1 if report["status"] == "fail" else 2


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="simctl", description=__doc__, epilog=_EPILOG)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="decoupled-frame constants vs coupling", epilog=_EPILOG)
    p.add_argument("--preset", default="fig2", choices=sorted(PARAMS_PRESETS))
    p.add_argument("--lambda", dest="lambda_grid", metavar="A:B:N", help="coupling grid")
    p.add_argument("--override", action="append", metavar="KEY=VALUE")
    p.add_argument("--out", default="params.csv")
    p.set_defaults(fn=_cmd_params)

    p = sub.add_parser("sweep", help="params table on an explicit coupling grid", epilog=_EPILOG)
    p.add_argument("--lambda", dest="lambda_grid", metavar="A:B:N", required=True)
    p.add_argument("--override", action="append", metavar="KEY=VALUE")
    p.add_argument("--out", default="sweep.csv")
    p.set_defaults(fn=_cmd_sweep)

    for name, help_, fn, default_out in (
        ("evolve", "closed-form (and optional oracle) time series to CSV", _cmd_evolve, "series.csv"),
        ("compare", "analytic-vs-oracle deviation report to JSON", _cmd_compare, None),
    ):
        p = sub.add_parser(name, help=help_, epilog=_EPILOG)
        p.add_argument("--config", help="JSON config file")
        p.add_argument("--preset", choices=sorted(RUN_PRESETS))
        p.add_argument("--override", action="append", metavar="KEY=VALUE",
                       help="override a config key (dots for nesting, e.g. oracle.n_max=24)")
        p.add_argument("--out", default=default_out)
        p.set_defaults(fn=fn)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except QodimerError as exc:
        print(f"simctl: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
