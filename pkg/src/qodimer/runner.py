"""Drivers behind the CLI: parameter tables, time series, oracle comparisons."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict

import numpy as np

from . import analytic, evolve, fock, measures
from .config import CompareConfig, RunConfig
from .errors import ConfigError, CutoffTooSmall, QodimerError, StabilityError
from .params import ModelParams, Variant, derive, validate
from .timeseries import TimeSeries


def worker_count() -> int:
    """Parallelism cap; SIMCTL_THREADS overrides the CPU count."""
    env = os.environ.get("SIMCTL_THREADS", "")
    if env.strip():
        try:
            n = int(env)
        except ValueError as exc:
            raise ConfigError(f"SIMCTL_THREADS must be an integer, got {env!r}") from exc
        if n < 1:
            raise ConfigError("SIMCTL_THREADS must be >= 1")
        return n
    return os.cpu_count() or 1


def _config_dict(cfg: RunConfig) -> dict:
    doc = asdict(cfg)
    doc["alpha"] = [cfg.alpha.real, cfg.alpha.imag]
    doc["beta"] = [cfg.beta.real, cfg.beta.imag]
    return doc


def run_params_table(lambda_grid: np.ndarray, base: ModelParams) -> TimeSeries:
    """Decoupled-frame constants of both model variants over a coupling grid."""
    lambda_grid = np.asarray(lambda_grid, dtype=float)
    cols = {
        name: np.empty_like(lambda_grid)
        for name in (
            "omega0_eff_j1", "omega0_eff_j2", "chi_j1", "chi_j2",
            "Omega_plus_j1", "Omega_minus_j1", "Omega_plus_j2", "Omega_minus_j2",
        )
    }
    for i, lam in enumerate(lambda_grid):
        for v in (1, 2):
            try:
                d = derive(validate(base.replace(lam=float(lam), variant=Variant(v))))
            except StabilityError as exc:
                raise StabilityError(f"lambda={lam:g}: {exc}") from exc
            cols[f"omega0_eff_j{v}"][i] = d.omega0_eff
            cols[f"chi_j{v}"][i] = d.chi
            cols[f"Omega_plus_j{v}"][i] = d.Omega_plus
            cols[f"Omega_minus_j{v}"][i] = d.Omega_minus
    meta = {"params": {"omega0": base.omega0, "omega": base.omega, "g": base.g, "mu": base.mu}}
    return TimeSeries(axis=lambda_grid, columns=cols, metadata=meta, axis_name="lambda")


def _analytic_outputs(cfg: RunConfig, variant: int, ts: np.ndarray) -> dict[str, np.ndarray]:
    d = derive(validate(cfg.model_params(variant)))
    ta = analytic.TransformedAmplitudes.from_modes(
        analytic.ModeAmplitudes(cfg.alpha, cfg.beta), d
    )
    need_rho = bool({"eof", "concurrence", "matrix_elements"} & set(cfg.outputs))
    rho = analytic.density_matrix_series(ts, d, ta, cfg.gamma) if need_rho else None
    out: dict[str, np.ndarray] = {}
    for kind in cfg.outputs:
        if kind == "purity":
            out[f"purity_j{variant}"] = analytic.purity_closed_form(ts, d, cfg.gamma)
        elif kind == "eof":
            out[f"eof_j{variant}"] = measures.eof_series(rho)
        elif kind == "concurrence":
            out[f"concurrence_j{variant}"] = measures.concurrence_series(rho)
        elif kind == "matrix_elements":
            for mn in analytic.COHERENCE_LABELS:
                i, k = analytic.BASIS_INDEX[mn[:2]], analytic.BASIS_INDEX[mn[2:]]
                out[f"re_rho_{mn}_j{variant}"] = rho[:, i, k].real
                out[f"im_rho_{mn}_j{variant}"] = rho[:, i, k].imag
    return out


def _oracle_reduced(cfg: RunConfig, variant: int, ts: np.ndarray) -> np.ndarray:
    space = fock.TruncatedSpace(cfg.oracle.n_max)
    params = validate(cfg.model_params(variant))
    h = fock.build_hamiltonian(params, space)
    psi0 = fock.initial_state(cfg.alpha, cfg.beta, space)
    step = evolve.default_step(params, derive(params))
    return evolve.reduced_qubit_series(
        h, psi0, cfg.gamma, ts, space, method=cfg.oracle.method, h=step
    )


def _oracle_outputs(cfg: RunConfig, variant: int, ts: np.ndarray) -> dict[str, np.ndarray]:
    rho = _oracle_reduced(cfg, variant, ts)
    out: dict[str, np.ndarray] = {}
    for kind in cfg.outputs:
        if kind == "purity":
            out[f"oracle_purity_j{variant}"] = measures.purity_series(rho)
        elif kind == "eof":
            out[f"oracle_eof_j{variant}"] = measures.eof_series(rho)
        elif kind == "concurrence":
            out[f"oracle_concurrence_j{variant}"] = measures.concurrence_series(rho)
        elif kind == "matrix_elements":
            for mn in analytic.COHERENCE_LABELS:
                i, k = analytic.BASIS_INDEX[mn[:2]], analytic.BASIS_INDEX[mn[2:]]
                out[f"oracle_re_rho_{mn}_j{variant}"] = rho[:, i, k].real
                out[f"oracle_im_rho_{mn}_j{variant}"] = rho[:, i, k].imag
    return out


def run_timeseries(configs: list[RunConfig]) -> TimeSeries:
    """Evaluate the closed-form dynamics (and optional oracle) on the grid.

    Bundle members contribute label-suffixed columns to one shared grid.
    """
    if not configs:
        raise ConfigError("no runs to execute")
    ts = configs[0].time_grid()
    for cfg in configs[1:]:
        if not np.array_equal(cfg.time_grid(), ts):
            raise ConfigError("bundle members must share one time grid")

    tasks = []
    for cfg in configs:
        for v in cfg.variants:
            tasks.append((cfg, v, False))
            if cfg.oracle.enabled:
                tasks.append((cfg, v, True))

    def run_task(task):
        cfg, v, is_oracle = task
        cols = _oracle_outputs(cfg, v, ts) if is_oracle else _analytic_outputs(cfg, v, ts)
        suffix = f"_{cfg.label}" if cfg.label else ""
        return {name + suffix: col for name, col in cols.items()}

    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        results = list(pool.map(run_task, tasks))
    columns: dict[str, np.ndarray] = {}
    for res in results:
        columns.update(res)
    meta = {"config": [_config_dict(c) for c in configs]}
    return TimeSeries(axis=ts, columns=columns, metadata=meta, axis_name="t")


def _deviation(a: np.ndarray, b: np.ndarray) -> tuple[float, float]:
    diff = np.abs(np.asarray(a) - np.asarray(b))
    return float(diff.max()), float(np.sqrt(np.mean(diff.astype(float) ** 2)))


def run_compare(cfg: RunConfig) -> dict:
    """Analytic vs oracle deviation report with pass/fail verdicts."""
    if not cfg.oracle.enabled:
        raise ConfigError("compare requires oracle.enabled = true")
    ts = cfg.time_grid()
    tol: CompareConfig = cfg.compare
    checks = []
    try:
        analytic_rho = {}
        for v in cfg.variants:
            d = derive(validate(cfg.model_params(v)))
            ta = analytic.TransformedAmplitudes.from_modes(
                analytic.ModeAmplitudes(cfg.alpha, cfg.beta), d
            )
            rho_a = analytic.density_matrix_series(ts, d, ta, cfg.gamma)
            analytic_rho[v] = rho_a
            rho_o = _oracle_reduced(cfg, v, ts)
            max_abs, rms = _deviation(rho_a, rho_o)
            checks.append(
                dict(name=f"rho_j{v}", max_abs=max_abs, rms=rms,
                     tol=tol.tol_matrix, passed=max_abs <= tol.tol_matrix)
            )
            for series_name, fn in (("purity", measures.purity_series), ("eof", measures.eof_series)):
                max_abs, rms = _deviation(fn(rho_a), fn(rho_o))
                checks.append(
                    dict(name=f"{series_name}_j{v}", max_abs=max_abs, rms=rms,
                         tol=tol.tol_series, passed=max_abs <= tol.tol_series)
                )
        if cfg.lam == 0.0 and set(cfg.variants) == {1, 2}:
            max_abs, rms = _deviation(analytic_rho[1], analytic_rho[2])
            checks.append(
                dict(name="variant_degeneracy_at_lambda0", max_abs=max_abs, rms=rms,
                     tol=tol.tol_variant_degeneracy,
                     passed=max_abs <= tol.tol_variant_degeneracy)
            )
    except (CutoffTooSmall, QodimerError) as exc:
        return {
            "status": "error",
            "error": {"type": type(exc).__name__, "message": str(exc)},
            "checks": checks,
            "config": _config_dict(cfg),
        }
    status = "pass" if all(c["passed"] for c in checks) else "fail"
    return {"status": status, "checks": checks, "config": _config_dict(cfg)}
