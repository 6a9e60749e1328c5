"""Named run configurations (pure data; resolved by config.resolve).

All presets use omega0 = omega = 1, g = 0.025, mu = 1 so that every number in
the emitted tables is in units of the qubit frequency.  Multi-run presets list
their members under "runs"; each member contributes columns suffixed with its
label to one shared time grid.
"""

_BASE = {
    "omega0": 1.0,
    "omega": 1.0,
    "g": 0.025,
    "mu": 1.0,
}

#: presets for `simctl evolve` / `simctl compare`
RUN_PRESETS = {
    # two-qubit purity for weak, moderate and near-critical mode coupling
    "fig3": {
        **_BASE,
        "gamma": 5e-5,
        "alpha": 0.5,
        "beta": 0.5,
        "t_start": 0.0,
        "t_end": 300.0,
        "n_points": 601,
        "outputs": ["purity"],
        "runs": [
            {"label": "lam0.05", "lambda": 0.05},
            {"label": "lam0.25", "lambda": 0.25},
            {"label": "lam0.48", "lambda": 0.48},
        ],
    },
    # long-horizon entanglement of formation, with and without dephasing
    "fig4": {
        **_BASE,
        "alpha": 2.0,
        "beta": 2.0,
        "t_start": 0.0,
        "t_end": 16000.0,
        "n_points": 32001,
        "outputs": ["eof"],
        "runs": [
            {"label": "lam0.05_gam0", "lambda": 0.05, "gamma": 0.0},
            {"label": "lam0.05_gam5e-05", "lambda": 0.05, "gamma": 5e-5},
            {"label": "lam0.25_gam0", "lambda": 0.25, "gamma": 0.0},
            {"label": "lam0.25_gam5e-05", "lambda": 0.25, "gamma": 5e-5},
            {"label": "lam0.48_gam0", "lambda": 0.48, "gamma": 0.0},
            {"label": "lam0.48_gam5e-05", "lambda": 0.48, "gamma": 5e-5},
        ],
    },
    # short-time entanglement of formation
    "fig5": {
        **_BASE,
        "gamma": 5e-5,
        "alpha": 2.0,
        "beta": 2.0,
        "t_start": 0.0,
        "t_end": 60.0,
        "n_points": 1201,
        "outputs": ["eof"],
        "runs": [
            {"label": "lam0.05", "lambda": 0.05},
            {"label": "lam0.25", "lambda": 0.25},
            {"label": "lam0.48", "lambda": 0.48},
        ],
    },
    # oracle cross-check at desk scale (the acceptance configuration)
    "oracle_check": {
        **_BASE,
        "gamma": 5e-5,
        "lambda": 0.05,
        "alpha": 0.5,
        "beta": 0.5,
        "t_start": 0.0,
        "t_end": 300.0,
        "n_points": 600,
        "outputs": ["purity", "eof", "matrix_elements"],
        "oracle": {"enabled": True, "n_max": 16, "method": "auto"},
    },
}

#: presets for `simctl params` (diagonal-frame constants vs coupling)
PARAMS_PRESETS = {
    "fig2": {
        **_BASE,
        "lambda_start": 0.0,
        "lambda_stop": 0.49,
        "lambda_points": 99,
    },
}
