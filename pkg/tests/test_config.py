from fractions import Fraction

import pytest

from lgallee.config import RunConfig
from lgallee.model import Params

F = Fraction

COEXTINCTION_TOML = """
name = "coextinction"
seed = 7

[model]
alpha = "1/2"
beta = 1
gamma = "1"
delta = "1/2"
eta = "1/10"

[solver]
atol = 1e-9

[output]
dir = "out"
format = "json"

[sweep]
parameter = "alpha"
start = "1/10"
stop = "9/10"
steps = 4
"""


@pytest.fixture
def coextinction_file(tmp_path):
    path = tmp_path / "coextinction.toml"
    path.write_text(COEXTINCTION_TOML)
    return str(path)


def test_defaults():
    cfg = RunConfig()
    assert cfg.seed == 20261018
    assert cfg.tol == (1e-10, 1e-10)
    assert cfg.output_format == "table"
    assert cfg.grid == (6, 6)


def test_from_toml(coextinction_file):
    cfg = RunConfig.from_toml(coextinction_file)
    assert cfg.name == "coextinction" and cfg.seed == 7
    assert cfg.params() == Params(F(1, 2), F(1), F(1), F(1, 2), F(1, 10))
    assert cfg.tol == (1e-9, 1e-10)
    assert cfg.output_dir == "out" and cfg.output_format == "json"
    assert (cfg.sweep_parameter, cfg.sweep_start, cfg.sweep_stop, cfg.sweep_steps) == ("alpha", "1/10", "9/10", 4)


def test_overrides_win_over_the_file(coextinction_file):
    cfg = RunConfig.from_toml(coextinction_file, alpha="1/3", seed=None)
    assert cfg.params().alpha == F(1, 3)
    assert cfg.seed == 7


def test_float_parameters_need_float_mode(tmp_path):
    path = tmp_path / "float.toml"
    path.write_text(COEXTINCTION_TOML.replace('alpha = "1/2"', "alpha = 0.5"))
    cfg = RunConfig.from_toml(str(path))
    with pytest.raises(ValueError):
        cfg.params()
    assert cfg.params(exact=False).alpha == 0.5


def test_unknown_section_is_rejected(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text(COEXTINCTION_TOML + "\n[plot]\ncolor = 'red'\n")
    with pytest.raises(ValueError, match="plot"):
        RunConfig.from_toml(str(path))


def test_missing_parameter():
    with pytest.raises(ValueError, match="missing"):
        RunConfig(alpha="1/2").params()


@pytest.mark.parametrize("kwargs", [
    {"output_format": "xml"},
    {"horizon": 0},
    {"atol": -1e-8},
    {"sweep_parameter": "z"},
])
def test_invalid_settings(kwargs):
    with pytest.raises(ValueError):
        RunConfig(**kwargs)


def test_radii():
    cfg = RunConfig(radius_min=0.01, radius_max=0.05, radius_count=5)
    assert cfg.radii == pytest.approx([0.01, 0.02, 0.03, 0.04, 0.05])
    with pytest.raises(ValueError):
        RunConfig(radius_count=1).radii


def test_to_dict_keeps_rational_text(coextinction_file):
    d = RunConfig.from_toml(coextinction_file).to_dict()
    assert d["model"]["alpha"] == "1/2" and d["model"]["beta"] == "1"
    assert d["output"] == {"dir": "out", "format": "json"}
