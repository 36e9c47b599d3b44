import json
from fractions import Fraction

import pytest

from moricone.config import Config, brill_noether_slope, config_from_dict, load_config
from moricone.errors import ConfigError

F = Fraction


def test_defaults():
    cfg = Config()
    assert cfg.nef_bound == 11
    assert cfg.slope(24) == (F(162, 25), "derived")
    assert cfg.slope(4) == (None, "derived")
    assert brill_noether_slope(5) == 8


def test_from_dict():
    cfg = config_from_dict({"nef_bound": "23/2", "slope_table": {"4": "17/2", "24": "unknown"}})
    assert cfg.nef_bound == F(23, 2)
    assert cfg.slope(4) == (F(17, 2), "config")
    assert cfg.slope(24) == (None, "config")


@pytest.mark.parametrize(
    "data",
    [
        {"nef_bound": 0.5},
        {"nef_bound": "-1"},
        {"slope_table": {"x": "1"}},
        {"slope_table": {"4": 6.5}},
        {"slope_table": {"4": "-3"}},
        {"g_max": 2},
        {"colour": "red"},
        [],
    ],
)
def test_rejects_bad_config(data):
    with pytest.raises(ConfigError):
        config_from_dict(data)


def test_load_config(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert load_config() == Config()
    (tmp_path / "moricone.json").write_text(json.dumps({"nef_bound": "12"}), encoding="utf-8")
    assert load_config().nef_bound == 12
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.json")
    (tmp_path / "bad.json").write_text("{", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_config(tmp_path / "bad.json")
