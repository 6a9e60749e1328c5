"""Grid-indexed result tables with lossless CSV round-tripping.

CSV layout: header row, axis column first (named ``t`` for time series,
``lambda`` for coupling sweeps), one column per named series.  Numbers are
written with 17 significant digits so parse(emit(x)) == x bit for bit.  A
sidecar ``<stem>.meta.json`` carries the resolved configuration, the code
version and the convention-ledger hash; the CSV itself stays free of
anything nondeterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .conventions import CONVENTIONS_HASH
from .errors import ConfigError


@dataclass
class TimeSeries:
    axis: np.ndarray
    columns: dict[str, np.ndarray]
    metadata: dict = field(default_factory=dict)
    axis_name: str = "t"

    def __post_init__(self):
        self.axis = np.asarray(self.axis, dtype=float)
        if self.axis.ndim != 1:
            raise ConfigError("axis must be one-dimensional")
        clean = {}
        for name, col in self.columns.items():
            col = np.asarray(col, dtype=float)
            if col.shape != self.axis.shape:
                raise ConfigError(
                    f"column {name!r} has length {col.size}, axis has {self.axis.size}"
                )
            if not np.all(np.isfinite(col)):
                raise ConfigError(f"column {name!r} contains NaN/Inf")
            clean[name] = col
        if not np.all(np.isfinite(self.axis)):
            raise ConfigError("axis contains NaN/Inf")
        self.columns = clean

    @property
    def t(self) -> np.ndarray:
        return self.axis

    def write_csv(self, path: str | Path) -> Path:
        """Write the table and its metadata sidecar; returns the CSV path."""
        path = Path(path)
        names = list(self.columns)
        with open(path, "w") as fh:
            fh.write(",".join([self.axis_name] + names) + "\n")
            cols = [self.axis] + [self.columns[n] for n in names]
            for row in zip(*cols):
                fh.write(",".join(f"{v:.17g}" for v in row) + "\n")
        meta = {
            "version": __version__,
            "conventions_sha256": CONVENTIONS_HASH,
            **self.metadata,
        }
        with open(meta_path(path), "w") as fh:
            json.dump(meta, fh, indent=2, sort_keys=True)
            fh.write("\n")
        return path

    @classmethod
    def read_csv(cls, path: str | Path) -> "TimeSeries":
        path = Path(path)
        with open(path) as fh:
            header = fh.readline().rstrip("\n").split(",")
            rows = [line.rstrip("\n").split(",") for line in fh if line.strip()]
        if not header or len(header) < 1:
            raise ConfigError(f"{path}: empty CSV header")
        data = np.array([[float(v) for v in row] for row in rows], dtype=float)
        if data.size == 0:
            data = data.reshape(0, len(header))
        metadata = {}
        mp = meta_path(path)
        if mp.exists():
            metadata = json.loads(mp.read_text())
        return cls(
            axis=data[:, 0],
            columns={name: data[:, i + 1] for i, name in enumerate(header[1:])},
            metadata=metadata,
            axis_name=header[0],
        )


def meta_path(csv_path: str | Path) -> Path:
    csv_path = Path(csv_path)
    return csv_path.with_name(csv_path.stem + ".meta.json")
