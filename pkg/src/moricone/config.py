"""External data the library cannot compute: slopes ``s_g`` and the nef bound.

The config file is UTF-8 JSON::

    {
      "nef_bound": "11",
      "slope_table": {"24": "162/25", "23": "unknown"},
      "g_max": 500,
      "d_max": 200
    }

Every key is optional.  Genera absent from ``slope_table`` fall back to the
Brill-Noether slope ``6 + 12/(g+1)`` when ``g + 1`` is composite and are
unknown otherwise.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .divisors import as_rat, brill_noether_factorization
from .errors import ConfigError

DEFAULT_CONFIG_NAME = "moricone.json"
UNKNOWN = "unknown"


def brill_noether_slope(g: int) -> Fraction | None:
    if brill_noether_factorization(g) is None:
        return None
    return 6 + Fraction(12, g + 1)


@dataclass
class Config:
    slope_table: dict[int, Fraction | None] = field(default_factory=dict)
    nef_bound: Fraction = Fraction(11)
    g_max: int = 500
    d_max: int = 200

    def __post_init__(self) -> None:
        self.nef_bound = as_rat(self.nef_bound)
        if self.nef_bound <= 0:
            raise ConfigError(f"nef_bound must be positive, got {self.nef_bound}")
        for g, s in self.slope_table.items():
            if s is not None and s <= 0:
                raise ConfigError(f"slope for genus {g} must be positive, got {s}")

    def slope(self, g: int) -> tuple[Fraction | None, str]:
        """``(s_g, provenance)``; ``s_g`` is None when unknown."""
        if g in self.slope_table:
            return self.slope_table[g], "config"
        return brill_noether_slope(g), "derived"


def _parse_slope(raw) -> Fraction | None:
    if raw is None or raw == UNKNOWN:
        return None
    if isinstance(raw, float):
        raise ConfigError("slopes must be exact: write them as strings like \"13/2\"")
    try:
        return as_rat(raw)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad slope value {raw!r}") from exc


def config_from_dict(data: dict) -> Config:
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    unknown_keys = set(data) - {"nef_bound", "slope_table", "g_max", "d_max"}
    if unknown_keys:
        raise ConfigError(f"unknown config keys: {sorted(unknown_keys)}")
    table = {}
    for key, raw in (data.get("slope_table") or {}).items():
        try:
            g = int(key)
        except ValueError as exc:
            raise ConfigError(f"slope_table key {key!r} is not a genus") from exc
        table[g] = _parse_slope(raw)
    kwargs = {"slope_table": table}
    if "nef_bound" in data:
        nb = data["nef_bound"]
        if isinstance(nb, float):
            raise ConfigError("nef_bound must be exact")
        try:
            kwargs["nef_bound"] = as_rat(nb)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad nef_bound {nb!r}") from exc
    for key in ("g_max", "d_max"):
        if key in data:
            if not isinstance(data[key], int) or data[key] < 3:
                raise ConfigError(f"{key} must be an integer >= 3")
            kwargs[key] = data[key]
    return Config(**kwargs)


def load_config(path: str | os.PathLike | None = None) -> Config:
    """Read ``path``; with no path, use ``./moricone.json`` if present, else defaults."""
    if path is None:
        candidate = Path(DEFAULT_CONFIG_NAME)
        if not candidate.is_file():
            return Config()
        path = candidate
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return config_from_dict(data)
