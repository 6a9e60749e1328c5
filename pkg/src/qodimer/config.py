"""Run-configuration parsing: one strict JSON document per run.

Unknown keys are a hard error so that preset typos cannot silently fall back
to defaults.  ``resolve`` expands an optional preset, applies document keys
and then override pairs, and returns the list of single-run configs (one per
"runs" member for bundle presets).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ConfigError
from .params import ModelParams, Variant
from .presets import RUN_PRESETS

_RUN_KEYS = {
    "preset", "label", "omega0", "omega", "g", "lambda", "mu", "gamma",
    "alpha", "beta", "t_start", "t_end", "n_points", "outputs", "variants",
    "oracle", "compare", "runs",
}
_ORACLE_KEYS = {"enabled", "n_max", "method"}
_COMPARE_KEYS = {"tol_matrix", "tol_series", "tol_variant_degeneracy"}
_OUTPUTS = ("purity", "eof", "concurrence", "matrix_elements")


@dataclass(frozen=True)
class OracleConfig:
    enabled: bool = False
    n_max: int = 16
    method: str = "auto"


@dataclass(frozen=True)
class CompareConfig:
    tol_matrix: float = 5e-3
    tol_series: float = 5e-3
    tol_variant_degeneracy: float = 1e-12


@dataclass(frozen=True)
class RunConfig:
    """One resolved run: physics, initial amplitudes, grid, outputs."""

    omega0: float = 1.0
    omega: float = 1.0
    g: float = 0.025
    lam: float = 0.0
    mu: float = 1.0
    gamma: float = 0.0
    alpha: complex = 0.0
    beta: complex = 0.0
    t_start: float = 0.0
    t_end: float = 300.0
    n_points: int = 601
    outputs: tuple[str, ...] = ("purity", "eof")
    variants: tuple[int, ...] = (1, 2)
    oracle: OracleConfig = field(default_factory=OracleConfig)
    compare: CompareConfig = field(default_factory=CompareConfig)
    label: str = ""

    def model_params(self, variant: int) -> ModelParams:
        return ModelParams(
            omega0=self.omega0,
            omega=self.omega,
            g=self.g,
            lam=self.lam,
            mu=self.mu,
            gamma=self.gamma,
            variant=Variant(variant),
        )

    def time_grid(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.n_points)


def _as_complex(value, key: str) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    raise ConfigError(f"{key} must be a number or an [re, im] pair, got {value!r}")


def _check_keys(doc: dict, allowed: set, where: str) -> None:
    unknown = set(doc) - allowed
    if unknown:
        raise ConfigError(f"unknown {where} key(s): {', '.join(sorted(unknown))}")


def _build_one(doc: dict) -> RunConfig:
    _check_keys(doc, _RUN_KEYS - {"preset", "runs"}, "config")
    oracle_doc = doc.get("oracle", {})
    if not isinstance(oracle_doc, dict):
        raise ConfigError("oracle must be an object")
    _check_keys(oracle_doc, _ORACLE_KEYS, "oracle")
    compare_doc = doc.get("compare", {})
    if not isinstance(compare_doc, dict):
        raise ConfigError("compare must be an object")
    _check_keys(compare_doc, _COMPARE_KEYS, "compare")

    outputs = tuple(doc.get("outputs", ("purity", "eof")))
    for o in outputs:
        if o not in _OUTPUTS:
            raise ConfigError(f"unknown output {o!r}; expected subset of {_OUTPUTS}")
    variants = tuple(int(v) for v in doc.get("variants", (1, 2)))
    if not variants or any(v not in (1, 2) for v in variants):
        raise ConfigError(f"variants must be a nonempty subset of [1, 2], got {variants}")

    cfg = RunConfig(
        omega0=float(doc.get("omega0", 1.0)),
        omega=float(doc.get("omega", 1.0)),
        g=float(doc.get("g", 0.025)),
        lam=float(doc.get("lambda", 0.0)),
        mu=float(doc.get("mu", 1.0)),
        gamma=float(doc.get("gamma", 0.0)),
        alpha=_as_complex(doc.get("alpha", 0.0), "alpha"),
        beta=_as_complex(doc.get("beta", 0.0), "beta"),
        t_start=float(doc.get("t_start", 0.0)),
        t_end=float(doc.get("t_end", 300.0)),
        n_points=int(doc.get("n_points", 601)),
        outputs=outputs,
        variants=variants,
        oracle=OracleConfig(
            enabled=bool(oracle_doc.get("enabled", False)),
            n_max=int(oracle_doc.get("n_max", 16)),
            method=str(oracle_doc.get("method", "auto")),
        ),
        compare=CompareConfig(
            tol_matrix=float(compare_doc.get("tol_matrix", 5e-3)),
            tol_series=float(compare_doc.get("tol_series", 5e-3)),
            tol_variant_degeneracy=float(compare_doc.get("tol_variant_degeneracy", 1e-12)),
        ),
        label=str(doc.get("label", "")),
    )
    if cfg.oracle.method not in ("auto", "eig", "rk4"):
        raise ConfigError(f"oracle method must be auto/eig/rk4, got {cfg.oracle.method!r}")
    if cfg.t_start < 0 or not np.isfinite(cfg.t_start) or not np.isfinite(cfg.t_end):
        raise ConfigError("need finite t_end > t_start >= 0")
    if cfg.n_points < 1:
        raise ConfigError("n_points must be positive")
    if cfg.n_points == 1:
        if cfg.t_end != cfg.t_start:
            raise ConfigError("a single-point grid requires t_end == t_start")
    elif cfg.t_end <= cfg.t_start:
        raise ConfigError("need t_end > t_start")
    return cfg


def _merge(*layers: dict) -> dict:
    """Left-to-right merge; dict values (oracle, compare) merge key-wise."""
    out: dict = {}
    for layer in layers:
        for key, value in layer.items():
            if isinstance(value, dict) and isinstance(out.get(key), dict):
                out[key] = {**out[key], **value}
            else:
                out[key] = value
    return out


def resolve(doc: dict | None = None, preset: str | None = None, overrides: dict | None = None) -> list[RunConfig]:
    """Expand preset -> document -> overrides into single-run configs.

    Preset expansion happens before validation, so overriding a preset field
    is identical to writing the fully expanded config by hand.
    """
    doc = dict(doc or {})
    _check_keys(doc, _RUN_KEYS, "config")
    preset = preset or doc.pop("preset", None)
    base: dict = {}
    if preset is not None:
        if preset not in RUN_PRESETS:
            raise ConfigError(f"unknown preset {preset!r}; have {sorted(RUN_PRESETS)}")
        base = RUN_PRESETS[preset]
    merged = _merge(base, doc, overrides or {})

    runs = merged.pop("runs", None)
    if runs is None:
        return [_build_one(merged)]
    out = []
    for member in runs:
        if not isinstance(member, dict):
            raise ConfigError("runs members must be objects")
        out.append(_build_one(_merge(merged, member, overrides or {})))
    labels = [c.label for c in out]
    if len(set(labels)) != len(labels):
        raise ConfigError(f"duplicate run labels: {labels}")
    return out


def load_config_file(path: str | Path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc})") from exc


def parse_override(text: str):
    """Parse one --override key=value pair; values are JSON when possible."""
    if "=" not in text:
        raise ConfigError(f"override must look like key=value, got {text!r}")
    key, raw = text.split("=", 1)
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return key.strip(), value


def apply_overrides(pairs: list[str]) -> dict:
    """Turn --override pairs into a (possibly nested via dots) dict."""
    out: dict = {}
    for pair in pairs:
        key, value = parse_override(pair)
        parts = key.split(".")
        node = out
        for part in parts[:-1]:
            node = node.setdefault(part, {})
            if not isinstance(node, dict):
                raise ConfigError(f"override {key!r} clashes with a scalar")
        node[parts[-1]] = value
    return out
