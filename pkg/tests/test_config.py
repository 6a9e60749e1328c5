import pytest

from qodimer.config import apply_overrides, resolve
from qodimer.errors import ConfigError
from qodimer.presets import RUN_PRESETS


def test_defaults():
    (cfg,) = resolve({})
    assert cfg.variants == (1, 2)
    assert cfg.outputs == ("purity", "eof")
    assert not cfg.oracle.enabled


def test_unknown_key_rejected():
    with pytest.raises(ConfigError, match="typo_key"):
        resolve({"typo_key": 1})
    with pytest.raises(ConfigError, match="oracle"):
        resolve({"oracle": {"nmax": 16}})
    with pytest.raises(ConfigError):
        resolve({"compare": {"tol": 1}})


def test_complex_amplitudes():
    (cfg,) = resolve({"alpha": [0.5, -0.25], "beta": 2})
    assert cfg.alpha == 0.5 - 0.25j
    assert cfg.beta == 2.0 + 0j
    with pytest.raises(ConfigError):
        resolve({"alpha": "x"})


def test_grid_validation():
    resolve({"t_start": 0, "t_end": 0, "n_points": 1})  # degenerate single point
    with pytest.raises(ConfigError):
        resolve({"t_start": 0, "t_end": 1, "n_points": 1})
    with pytest.raises(ConfigError):
        resolve({"t_start": 2, "t_end": 1, "n_points": 10})
    with pytest.raises(ConfigError):
        resolve({"n_points": 0})


def test_outputs_and_variants_validation():
    with pytest.raises(ConfigError):
        resolve({"outputs": ["purity", "entropy"]})
    with pytest.raises(ConfigError):
        resolve({"variants": [3]})
    (cfg,) = resolve({"variants": [2], "outputs": ["matrix_elements"]})
    assert cfg.variants == (2,)


def test_preset_bundle_expansion():
    cfgs = resolve(preset="fig3")
    assert [c.label for c in cfgs] == ["lam0.05", "lam0.25", "lam0.48"]
    assert [c.lam for c in cfgs] == [0.05, 0.25, 0.48]
    assert all(c.gamma == 5e-5 for c in cfgs)


def test_preset_override_equals_explicit_config():
    # resolving a preset then overriding equals writing the full config directly
    via_preset = resolve(preset="fig3", overrides={"gamma": 0.0, "n_points": 11})
    explicit_doc = {**RUN_PRESETS["fig3"], "gamma": 0.0, "n_points": 11}
    explicit = resolve(explicit_doc)
    assert via_preset == explicit


def test_nested_override_merges():
    cfgs = resolve(
        {"oracle": {"enabled": True, "n_max": 20}},
        overrides=apply_overrides(["oracle.n_max=24"]),
    )
    assert cfgs[0].oracle.enabled is True
    assert cfgs[0].oracle.n_max == 24


def test_unknown_preset():
    with pytest.raises(ConfigError, match="unknown preset"):
        resolve(preset="fig9")


def test_apply_overrides_parsing():
    out = apply_overrides(["gamma=0.0", "outputs=[\"purity\"]", "oracle.method=rk4"])
    assert out == {"gamma": 0.0, "outputs": ["purity"], "oracle": {"method": "rk4"}}
    with pytest.raises(ConfigError):
        apply_overrides(["no_equals_sign"])
