import numpy as np
import pytest

import qodimer as q
from qodimer.config import resolve
from qodimer.errors import StabilityError
from qodimer.runner import run_compare, run_params_table, run_timeseries


def base():
    return q.ModelParams(omega0=1.0, omega=1.0, g=0.025, lam=0.0, mu=1.0)


class TestParamsTable:
    def test_uncoupled_row(self):
        table = run_params_table(np.array([0.0, 0.25]), base())
        assert table.axis_name == "lambda"
        assert table.columns["chi_j1"][0] == 0.0
        assert table.columns["chi_j2"][0] == 0.0
        for col in ("Omega_plus_j1", "Omega_minus_j1", "Omega_plus_j2", "Omega_minus_j2"):
            assert table.columns[col][0] == 1.0

    def test_quarter_coupling_row_matches_derive(self):
        table = run_params_table(np.array([0.25]), base())
        d = q.derive(base().replace(lam=0.25, variant=q.Variant.RWA))
        assert table.columns["chi_j2"][0] == d.chi
        assert table.columns["Omega_plus_j2"][0] == d.Omega_plus
        assert table.columns["omega0_eff_j2"][0] == d.omega0_eff

    def test_models_diverge_with_coupling(self):
        grid = np.linspace(0, 0.49, 50)
        table = run_params_table(grid, base())
        split = np.abs(table.columns["Omega_minus_j1"] - table.columns["Omega_minus_j2"])
        assert split[0] == 0.0
        assert np.all(np.diff(split) > 0)

    def test_offending_lambda_reported(self):
        with pytest.raises(StabilityError, match="lambda=0.5"):
            run_params_table(np.array([0.0, 0.5]), base())


class TestTimeseries:
    def test_single_point_grid(self):
        cfgs = resolve({"t_start": 0, "t_end": 0, "n_points": 1, "lambda": 0.05,
                        "gamma": 5e-5, "alpha": 0.5, "beta": 0.5})
        series = run_timeseries(cfgs)
        assert series.columns["purity_j1"][0] == 1.0
        assert series.columns["eof_j1"][0] == 0.0

    def test_bundle_columns_and_metadata(self):
        cfgs = resolve(preset="fig5", overrides={"n_points": 5, "t_end": 2.0})
        series = run_timeseries(cfgs)
        assert "eof_j1_lam0.05" in series.columns
        assert "eof_j2_lam0.48" in series.columns
        assert len(series.columns) == 6
        assert len(series.metadata["config"]) == 3

    def test_matrix_element_columns(self):
        cfgs = resolve({"outputs": ["matrix_elements"], "lambda": 0.1,
                        "alpha": 0.3, "beta": 0.3, "t_end": 5.0, "n_points": 3,
                        "variants": [1]})
        series = run_timeseries(cfgs)
        assert "re_rho_eeeg_j1" in series.columns
        assert "im_rho_gegg_j1" in series.columns
        assert len(series.columns) == 12

    def test_oracle_columns(self):
        cfgs = resolve({"lambda": 0.05, "gamma": 5e-5, "alpha": 0.5, "beta": 0.5,
                        "t_end": 10.0, "n_points": 6, "outputs": ["purity"],
                        "oracle": {"enabled": True, "n_max": 10}})
        series = run_timeseries(cfgs)
        dev = np.abs(series.columns["purity_j1"] - series.columns["oracle_purity_j1"]).max()
        assert dev < 1e-9


class TestCompare:
    def test_pass_and_checks(self):
        cfgs = resolve({"lambda": 0.05, "gamma": 5e-5, "alpha": 0.5, "beta": 0.5,
                        "t_end": 30.0, "n_points": 16,
                        "oracle": {"enabled": True, "n_max": 12}})
        report = run_compare(cfgs[0])
        assert report["status"] == "pass"
        names = {c["name"] for c in report["checks"]}
        assert {"rho_j1", "rho_j2", "purity_j1", "eof_j2"} <= names
        assert all(c["max_abs"] < 1e-9 for c in report["checks"])

    def test_variant_degeneracy_at_lambda0(self):
        cfgs = resolve({"lambda": 0.0, "gamma": 1e-4, "alpha": 0.4, "beta": 0.4,
                        "t_end": 20.0, "n_points": 11,
                        "oracle": {"enabled": True, "n_max": 10}})
        report = run_compare(cfgs[0])
        assert report["status"] == "pass"
        deg = [c for c in report["checks"] if c["name"] == "variant_degeneracy_at_lambda0"]
        assert deg and deg[0]["max_abs"] < 1e-12

    def test_cutoff_error_reported(self):
        cfgs = resolve({"lambda": 0.05, "alpha": 2.0, "beta": 2.0,
                        "t_end": 10.0, "n_points": 5,
                        "oracle": {"enabled": True, "n_max": 4}})
        report = run_compare(cfgs[0])
        assert report["status"] == "error"
        assert report["error"]["type"] == "CutoffTooSmall"
