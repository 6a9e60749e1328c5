"""Render the four reference figures from simulation CSV files.

This package never computes physics: it reads the CSV tables emitted by
`simctl` and lays them out.  Solid blue curves are the complete model (j=1),
dashed red curves the rotating-wave model (j=2).  Output format follows the
file extension (png, svg, pdf).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

FIGURE_IDS = ("fig2", "fig3", "fig4", "fig5")


class FigkitError(Exception):
    pass


class MissingColumn(FigkitError):
    def __init__(self, column: str, path):
        super().__init__(f"column {column!r} not found in {path}")
        self.column = column


@dataclass(frozen=True)
class Style:
    solid_color: str = "tab:blue"      # complete model
    dashed_color: str = "tab:red"      # rotating-wave model
    linewidth: float = 1.0
    dpi: int = 150


@dataclass(frozen=True)
class FigureSpec:
    figure: str
    csv_paths: tuple[str, ...]
    out_path: str
    style: Style = field(default_factory=Style)
    columns: tuple[str, ...] = ()  # extra columns that must be present

    def __post_init__(self):
        if self.figure not in FIGURE_IDS:
            raise FigkitError(f"figure must be one of {FIGURE_IDS}, got {self.figure!r}")
        if len(self.csv_paths) != 1:
            raise FigkitError(f"{self.figure} takes exactly one CSV, got {len(self.csv_paths)}")


def load_csv(path) -> dict[str, np.ndarray]:
    """Parse a simctl CSV into named float columns (axis included)."""
    path = Path(path)
    with open(path) as fh:
        header = fh.readline().strip().split(",")
        data = np.array([[float(v) for v in line.split(",")] for line in fh if line.strip()])
    if data.size == 0:
        raise FigkitError(f"{path}: no data rows")
    return {name: data[:, i] for i, name in enumerate(header)}


def _require(table: dict, column: str, path):
    if column not in table:
        raise MissingColumn(column, path)
    return table[column]


def _pair_labels(table: dict, prefix: str) -> list[str]:
    """Suffixes for which both models are present, e.g. 'lam0.05'."""
    pat = re.compile(rf"^{prefix}_j1_(.+)$")
    labels = sorted(m.group(1) for c in table for m in [pat.match(c)] if m)
    if not labels and f"{prefix}_j1" in table:
        return [""]
    return labels


def _col(prefix: str, variant: int, label: str) -> str:
    name = f"{prefix}_j{variant}"
    return f"{name}_{label}" if label else name


def _plot_pair(ax, x, table, prefix, label, style, path):
    ax.plot(x, _require(table, _col(prefix, 1, label), path),
            color=style.solid_color, ls="-", lw=style.linewidth)
    ax.plot(x, _require(table, _col(prefix, 2, label), path),
            color=style.dashed_color, ls="--", lw=style.linewidth)


def _render_fig2(spec: FigureSpec):
    path = spec.csv_paths[0]
    table = load_csv(path)
    lam = _require(table, "lambda", path)
    rows = [
        ("omega0_eff", r"$\omega_{0,j}$"),
        ("chi", r"$\chi_j$"),
        ("Omega_plus", r"$\Omega_{j+}$"),
        ("Omega_minus", r"$\Omega_{j-}$"),
    ]
    fig, axes = plt.subplots(4, 1, figsize=(4.2, 9.0), sharex=True)
    for ax, (prefix, label) in zip(axes, rows):
        _plot_pair(ax, lam, table, prefix, "", spec.style, path)
        ax.set_ylabel(label)
    axes[-1].set_xlabel(r"$\lambda/\omega$")
    return fig


def _render_panel_grid(spec: FigureSpec, prefix: str, ylabel: str):
    path = spec.csv_paths[0]
    table = load_csv(path)
    t = _require(table, "t", path)
    labels = _pair_labels(table, prefix)
    for column in spec.columns:
        _require(table, column, path)
    if not labels:
        raise MissingColumn(f"{prefix}_j1*", path)
    n = len(labels)
    fig, axes = plt.subplots(n, 1, figsize=(5.2, 2.3 * n), sharex=True, squeeze=False)
    for ax, label in zip(axes[:, 0], labels):
        _plot_pair(ax, t, table, prefix, label, spec.style, path)
        ax.set_ylabel(ylabel)
        if label:
            ax.set_title(label.replace("_", "  "), fontsize=9)
    axes[-1, 0].set_xlabel(r"$\omega_0 t$")
    return fig


def render(spec: FigureSpec) -> Path:
    """Write the figure described by spec; returns the output path."""
    if spec.figure == "fig2":
        fig = _render_fig2(spec)
    elif spec.figure == "fig3":
        fig = _render_panel_grid(spec, "purity", r"$\mathcal{P}_j$")
    elif spec.figure == "fig4":
        fig = _render_panel_grid(spec, "eof", r"$E_F$")
    else:
        fig = _render_panel_grid(spec, "eof", r"$E_F$")
    fig.tight_layout()
    out = Path(spec.out_path)
    fig.savefig(out, dpi=spec.style.dpi, metadata=_stable_metadata(out))
    plt.close(fig)
    return out


def _stable_metadata(out: Path):
    # keep output byte-stable across runs: no dates, no tool versions
    suffix = out.suffix.lower()
    if suffix == ".png":
        return {"Software": ""}
    if suffix == ".svg":
        return {"Date": None, "Creator": None}
    if suffix == ".pdf":
        return {"CreationDate": None, "Producer": None, "Creator": None}
    return None
