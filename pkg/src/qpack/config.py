"""Run configuration: a flat JSON object with named keys."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

import numpy as np

from .cluster import ClusterError, GCluster, GroupSpec, build_cluster
from .diffract import GridSpec, THRESHOLD_RATIO
from .embed import Embedding, embed
from .generate import EPS_POS, Pattern, generate_standard
from .modified import ModifiedConfig, default_delta, generate_modified
from .strip import StripSpec, make_strip


class ConfigError(ValueError):
    def __init__(self, key: str, msg: str):
        super().__init__(f"{key}: {msg}")
        self.key = key


KEYS = {
    "name", "group", "n", "seeds", "cluster_points", "translation", "radius",
    "radius_space", "cap", "method", "p", "delta", "eps_pos", "grid_min",
    "grid_step", "grid_counts", "threshold_ratio", "out_dir", "formats",
    "verify_samples", "seed",
}
FORMATS = ("csv", "svg", "latex")


@dataclass
class RunConfig:
    group: GroupSpec
    seeds: list[tuple[float, ...]]
    translation: list[float] | float = 0.1
    radius: float = 9.0
    radius_space: str = "super"
    cap: int | None = 6000
    method: str = "standard"
    p: float = 50.0
    delta: float | str = "auto"
    eps_pos: float = EPS_POS
    grid: GridSpec = field(default_factory=GridSpec)
    threshold_ratio: float = THRESHOLD_RATIO
    cluster_points: list[tuple[float, ...]] | None = None
    name: str = "run"
    out_dir: str = "out"
    formats: list[str] = field(default_factory=lambda: ["csv"])
    verify_samples: int = 10000
    seed: int = 0

    # -- assembly -----------------------------------------------------------

    def cluster(self) -> GCluster:
        if self.cluster_points is not None:
            return GCluster(np.array(self.cluster_points, dtype=float), self.group, ())
        return build_cluster(self.group, self.seeds)

    def embedding(self) -> Embedding:
        return embed(self.cluster())

    def strip(self, emb: Embedding | None = None) -> StripSpec:
        emb = emb or self.embedding()
        t = self.translation
        if isinstance(t, list) and len(t) != emb.k:
            raise ConfigError("translation", f"expected {emb.k} components, got {len(t)}")
        return make_strip(emb, t, self.radius, self.cap, self.radius_space)

    def resolved_delta(self) -> float:
        if self.delta == "auto":
            return default_delta(self.cluster())
        return float(self.delta)

    def pattern(self, method: str | None = None) -> Pattern:
        method = method or self.method
        spec = self.strip()
        if method == "standard":
            return generate_standard(spec, self.eps_pos)
        return generate_modified(ModifiedConfig(spec, self.p, self.resolved_delta(), self.eps_pos))


def _num(raw: dict, key: str, lo: float | None = None, hi: float | None = None,
         lo_open: bool = False, integer: bool = False):
    v = raw[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(key, f"expected a number, got {v!r}")
    if not math.isfinite(v) and not (key == "delta" and v == math.inf):
        raise ConfigError(key, f"must be finite, got {v!r}")
    if integer and int(v) != v:
        raise ConfigError(key, f"expected an integer, got {v!r}")
    if lo is not None and (v < lo or (lo_open and v == lo)):
        raise ConfigError(key, f"must be {'>' if lo_open else '>='} {lo}, got {v!r}")
    if hi is not None and v > hi:
        raise ConfigError(key, f"must be <= {hi}, got {v!r}")
    return int(v) if integer else float(v)


def _vectors(raw: dict, key: str, d: int) -> list[tuple[float, ...]]:
    v = raw[key]
    if not isinstance(v, list) or not v:
        raise ConfigError(key, "expected a non-empty list of vectors")
    out = []
    for item in v:
        if not isinstance(item, list) or len(item) != d or not all(
            isinstance(c, (int, float)) and not isinstance(c, bool) for c in item
        ):
            raise ConfigError(key, f"each entry must be a list of {d} numbers, got {item!r}")
        out.append(tuple(float(c) for c in item))
    return out


def parse_config(raw: dict[str, Any]) -> RunConfig:
    if not isinstance(raw, dict):
        raise ConfigError("<root>", "config must be a JSON object")
    unknown = sorted(set(raw) - KEYS)
    if unknown:
        raise ConfigError(unknown[0], "unknown key")

    g = raw.get("group", "cyclic")
    try:
        if g == "cyclic":
            if "n" not in raw:
                raise ConfigError("n", "required for a cyclic group")
            group = GroupSpec.cyclic(_num(raw, "n", 3, integer=True))
        elif g == "icosahedral":
            if "n" in raw:
                raise ConfigError("n", "not allowed for the icosahedral group")
            group = GroupSpec.icosahedral()
        else:
            raise ConfigError("group", f"expected 'cyclic' or 'icosahedral', got {g!r}")
    except ClusterError as exc:
        raise ConfigError("group", str(exc)) from exc

    cfg = RunConfig(group=group, seeds=[])
    if "seeds" in raw:
        cfg.seeds = _vectors(raw, "seeds", group.d)
        for s in cfg.seeds:
            if not any(s):
                raise ConfigError("seeds", "zero seed")
    if "cluster_points" in raw and raw["cluster_points"] is not None:
        cfg.cluster_points = _vectors(raw, "cluster_points", group.d)
    if not cfg.seeds and cfg.cluster_points is None:
        raise ConfigError("seeds", "required (or give cluster_points)")

    if "translation" in raw:
        t = raw["translation"]
        if isinstance(t, list):
            if not all(isinstance(c, (int, float)) and not isinstance(c, bool) and math.isfinite(c) for c in t):
                raise ConfigError("translation", "entries must be finite numbers")
            cfg.translation = [float(c) for c in t]
        else:
            cfg.translation = _num(raw, "translation")
    if "radius" in raw:
        cfg.radius = _num(raw, "radius", 0, lo_open=True)
    if "radius_space" in raw:
        if raw["radius_space"] not in ("super", "physical"):
            raise ConfigError("radius_space", f"expected 'super' or 'physical', got {raw['radius_space']!r}")
        cfg.radius_space = raw["radius_space"]
    if "cap" in raw:
        cfg.cap = None if raw["cap"] is None else _num(raw, "cap", 1, integer=True)
    if "method" in raw:
        if raw["method"] not in ("standard", "modified"):
            raise ConfigError("method", f"expected 'standard' or 'modified', got {raw['method']!r}")
        cfg.method = raw["method"]
    if "p" in raw:
        cfg.p = _num(raw, "p", 0, 100, lo_open=True)
    if "eps_pos" in raw:
        cfg.eps_pos = _num(raw, "eps_pos", 0, lo_open=True)
    if "delta" in raw:
        if raw["delta"] == "auto":
            cfg.delta = "auto"
        else:
            cfg.delta = _num(raw, "delta", cfg.eps_pos)

    gmin = raw.get("grid_min", list(GridSpec.min))
    gstep = raw.get("grid_step", GridSpec.step)
    gcounts = raw.get("grid_counts", list(GridSpec.counts))
    if not (isinstance(gmin, list) and len(gmin) == 2 and all(isinstance(c, (int, float)) for c in gmin)):
        raise ConfigError("grid_min", "expected two numbers")
    if isinstance(gstep, bool) or not isinstance(gstep, (int, float)) or not gstep > 0:
        raise ConfigError("grid_step", f"must be a positive number, got {gstep!r}")
    if not (isinstance(gcounts, list) and len(gcounts) == 2
            and all(isinstance(c, int) and not isinstance(c, bool) and c >= 1 for c in gcounts)):
        raise ConfigError("grid_counts", "expected two integers >= 1")
    cfg.grid = GridSpec((float(gmin[0]), float(gmin[1])), float(gstep), (gcounts[0], gcounts[1]))
    if "threshold_ratio" in raw:
        cfg.threshold_ratio = _num(raw, "threshold_ratio", 0, 1, lo_open=True)

    if "name" in raw:
        cfg.name = str(raw["name"])
    if "out_dir" in raw:
        cfg.out_dir = str(raw["out_dir"])
    if "formats" in raw:
        f = raw["formats"]
        if not isinstance(f, list) or any(x not in FORMATS for x in f):
            raise ConfigError("formats", f"expected a list drawn from {FORMATS}, got {f!r}")
        cfg.formats = list(f)
    if "verify_samples" in raw:
        cfg.verify_samples = _num(raw, "verify_samples", 1, integer=True)
    if "seed" in raw:
        cfg.seed = _num(raw, "seed", 0, integer=True)
    return cfg


def shipped_config(name: str) -> Path:
    """Path of a config bundled with the package (fig3.json, fig4.json, ...)."""
    return Path(str(resources.files("qpack") / "configs" / name))


def load_config(path) -> RunConfig:
    path = Path(path)
    if not path.exists():
        bundled = shipped_config(path.name)
        if path.parent == Path(".") and bundled.exists():
            path = bundled
        else:
            raise FileNotFoundError(f"config file not found: {path}")
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError("<file>", f"JSON parse error at line {exc.lineno}: {exc.msg}") from exc
    return parse_config(raw)
