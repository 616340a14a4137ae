"""Breadth-first enumeration of the translated strip and the standard pattern."""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .embed import project_phys
from .strip import StripSpec, in_strip, in_strip_many

EPS_POS = 1e-4

LatticePoint = tuple[int, ...]


@dataclass(frozen=True)
class ProjectedPoint:
    phys: tuple[float, ...]
    source: LatticePoint
    occupation: int
    role: str = "standard"  # standard | center | completion | admitted


@dataclass
class Pattern:
    points: list[ProjectedPoint]
    method: str
    config: dict = field(default_factory=dict)
    analysed: int = 0
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[ProjectedPoint]:
        return iter(self.points)

    @property
    def d(self) -> int:
        return len(self.points[0].phys) if self.points else int(self.config.get("d", 2))

    def positions(self) -> np.ndarray:
        if not self.points:
            return np.zeros((0, self.d))
        return np.array([p.phys for p in self.points], dtype=float)

    def sources(self) -> np.ndarray:
        return np.array([p.source for p in self.points], dtype=np.int64)

    def occupations(self) -> np.ndarray:
        return np.array([p.occupation for p in self.points], dtype=np.int64)


@dataclass
class Fragment:
    """In-strip lattice points in dequeue order."""

    points: list[LatticePoint]
    analysed: int
    truncated: bool


class PointIndex:
    """Grid hash answering "is there a stored point closer than ``radius``?"."""

    def __init__(self, radius: float, d: int):
        self.radius = float(radius)
        self.d = d
        self.cell = self.radius if self.radius > 0 and math.isfinite(self.radius) else None
        self._grid: dict[tuple, list[np.ndarray]] = {}
        self._all: list[np.ndarray] = []

    def _key(self, p: np.ndarray) -> tuple:
        return tuple(int(math.floor(c / self.cell)) for c in p)

    def near(self, p: np.ndarray, strict: bool = True) -> bool:
        """True if some stored point is at distance < radius (or <= if not strict)."""
        if self.radius <= 0:
            return False
        if self.cell is None:  # infinite radius
            return bool(self._all)
        key = self._key(p)
        r2 = self.radius**2
        for off in itertools.product((-1, 0, 1), repeat=self.d):
            for q in self._grid.get(tuple(a + b for a, b in zip(key, off)), ()):
                dist2 = float(np.sum((p - q) ** 2))
                if dist2 < r2 or (not strict and dist2 <= r2):
                    return True
        return False

    def add(self, p: np.ndarray) -> None:
        p = np.asarray(p, dtype=float)
        self._all.append(p)
        if self.cell is not None:
            self._grid.setdefault(self._key(p), []).append(p)


def round_half_away(t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    return np.sign(t) * np.floor(np.abs(t) + 0.5)


def neighbors(x: LatticePoint) -> list[LatticePoint]:
    """x - e_1, x + e_1, x - e_2, ..., x + e_k."""
    out = []
    for i in range(len(x)):
        for s in (-1, 1):
            y = list(x)
            y[i] += s
            out.append(tuple(y))
    return out


def _shifted(spec: StripSpec, x) -> np.ndarray:
    return np.asarray(x, dtype=float) - spec.t


def enumerate_fragment(spec: StripSpec, expand_horizon: float | None = None) -> Fragment:
    """Breadth-first walk of the strip starting at round(t).

    Only in-strip points are expanded.  With ``spec.cap`` set, the walk stops
    after ``cap`` dequeues.  With ``cap=None`` the walk is bounded instead by
    expanding only from points with |x - t| < R + horizon (superspace norm,
    horizon defaults to sqrt(k)), which makes it terminate.
    """
    start = tuple(int(v) for v in round_half_away(spec.t))
    queue = deque([start])
    seen = {start}
    found: list[LatticePoint] = []
    analysed = 0
    limit = None
    if spec.cap is None:
        h = math.sqrt(spec.k) if expand_horizon is None else expand_horizon
        limit = (spec.R + h) ** 2
    while queue and (spec.cap is None or analysed < spec.cap):
        x = queue.popleft()
        analysed += 1
        y = _shifted(spec, x)
        if not in_strip(spec, y):
            continue
        found.append(x)
        if limit is not None and float(y @ y) >= limit:
            continue
        for nb in neighbors(x):
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return Fragment(found, analysed, bool(queue))


def occupation(spec: StripSpec, x) -> int:
    """Number of the 2k lattice neighbours of ``x`` lying in the translated strip."""
    nbs = np.array(neighbors(tuple(int(c) for c in x)), dtype=float) - spec.t
    return int(np.count_nonzero(in_strip_many(spec, nbs)))


def occupations(spec: StripSpec, xs) -> np.ndarray:
    xs = [tuple(int(c) for c in x) for x in xs]
    if not xs:
        return np.zeros(0, dtype=np.int64)
    nbs = np.array([nb for x in xs for nb in neighbors(x)], dtype=float) - spec.t
    flags = in_strip_many(spec, nbs).reshape(len(xs), 2 * spec.k)
    return flags.sum(axis=1).astype(np.int64)


def within_radius(spec: StripSpec, x) -> bool:
    y = _shifted(spec, x)
    if spec.radius_space == "super":
        return float(y @ y) < spec.R**2
    p = project_phys(spec.embedding, y)
    return float(p @ p) < spec.R**2


def radius_gated(spec: StripSpec, frag: Fragment) -> list[LatticePoint]:
    return [x for x in frag.points if within_radius(spec, x)]


def config_snapshot(spec: StripSpec, **extra) -> dict:
    emb = spec.embedding
    snap = {
        "d": emb.d,
        "k": emb.k,
        "reps": emb.v.tolist(),
        "t": spec.t.tolist(),
        "R": spec.R,
        "cap": spec.cap,
        "radius_space": spec.radius_space,
    }
    snap.update(extra)
    return snap


def generate_standard(spec: StripSpec, eps_pos: float = EPS_POS) -> Pattern:
    """Projection of the radius-gated strip fragment, in enumeration order."""
    frag = enumerate_fragment(spec)
    gated = radius_gated(spec, frag)
    occ = occupations(spec, gated)
    index = PointIndex(eps_pos, spec.embedding.d)
    pts = []
    for x, n in zip(gated, occ):
        p = project_phys(spec.embedding, np.array(x, dtype=float))
        if index.near(p):
            continue
        index.add(p)
        pts.append(ProjectedPoint(tuple(float(c) for c in p), x, int(n)))
    return Pattern(
        pts,
        "standard",
        config_snapshot(spec, eps_pos=eps_pos),
        analysed=frag.analysed,
        truncated=frag.truncated,
    )
