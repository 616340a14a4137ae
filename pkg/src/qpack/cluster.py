"""Point-group orbits and G-clusters.

Two groups are supported: the cyclic group C_n acting on the plane by
rotations through 2*pi/n, and the chiral icosahedral group Y (order 60)
acting on R^3 through the generators

    a = [[(tau-1)/2, -tau/2,     1/2      ],
         [ tau/2,      1/2,     (tau-1)/2 ],
         [-1/2,       (tau-1)/2, tau/2    ]]
    b = diag(-1, -1, 1)

with a^5 = b^2 = (ab)^3 = e.  A G-cluster is a finite union of orbits that is
symmetric under v -> -v; it is stored through one representative per
antipodal pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

TAU = (1.0 + 5.0**0.5) / 2.0

EPS_MAT = 1e-9
EPS_DUP_REL = 1e-9


class ClusterError(ValueError):
    """Invalid orbit seed, group or cluster."""


@dataclass(frozen=True)
class GroupSpec:
    """Either ``cyclic`` (with ``n``) acting on R^2 or ``icosahedral`` on R^3."""

    kind: str
    n: int | None = None

    def __post_init__(self):
        if self.kind == "cyclic":
            if self.n is None or int(self.n) != self.n or self.n < 3:
                raise ClusterError(f"cyclic group needs an integer n >= 3, got {self.n!r}")
        elif self.kind == "icosahedral":
            if self.n is not None:
                raise ClusterError("icosahedral group takes no n")
        else:
            raise ClusterError(f"unknown group kind {self.kind!r}")

    @classmethod
    def cyclic(cls, n: int) -> GroupSpec:
        return cls("cyclic", int(n))

    @classmethod
    def icosahedral(cls) -> GroupSpec:
        return cls("icosahedral")

    @property
    def d(self) -> int:
        return 2 if self.kind == "cyclic" else 3

    def generators(self) -> list[np.ndarray]:
        if self.kind == "cyclic":
            return [rotation2d(self.n)]
        return list(icosahedral_generators())

    def __str__(self) -> str:
        return f"C{self.n}" if self.kind == "cyclic" else "Y"


def rotation2d(n: int, j: int = 1) -> np.ndarray:
    """Rotation of the plane through 2*pi*j/n."""
    phi = 2.0 * np.pi * j / n
    c, s = np.cos(phi), np.sin(phi)
    return np.array([[c, -s], [s, c]])


def _as_seed(seed, d: int) -> np.ndarray:
    v = np.asarray(seed, dtype=float)
    if v.shape != (d,):
        raise ClusterError(f"seed must be a {d}-vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ClusterError("seed has non-finite coordinates")
    if not np.any(v):
        raise ClusterError("zero seed generates the trivial orbit")
    return v


def cyclic_orbit(n: int, seed) -> np.ndarray:
    """The ``n`` points a^j(seed), j = 0..n-1, as an (n, 2) array in j order."""
    if int(n) != n or n < 3:
        raise ClusterError(f"n must be an integer >= 3, got {n!r}")
    v = _as_seed(seed, 2)
    return np.array([rotation2d(n, j) @ v for j in range(int(n))])


def icosahedral_generators() -> tuple[np.ndarray, np.ndarray]:
    h = 0.5
    a = np.array(
        [
            [(TAU - 1) * h, -TAU * h, h],
            [TAU * h, h, (TAU - 1) * h],
            [-h, (TAU - 1) * h, TAU * h],
        ]
    )
    b = np.diag([-1.0, -1.0, 1.0])
    return a, b


def icosahedral_group() -> np.ndarray:
    """All 60 rotations of Y as a (60, 3, 3) array, identity first.

    Obtained as the breadth-first closure of {a, b} under left multiplication.
    """
    gens = icosahedral_generators()
    elements = [np.eye(3)]
    frontier = [np.eye(3)]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s @ g
                if not any(np.max(np.abs(h - e)) < EPS_MAT for e in elements):
                    elements.append(h)
                    nxt.append(h)
        frontier = nxt
    if len(elements) != 60:  # pragma: no cover - constants are fixed
        raise RuntimeError(f"closure produced {len(elements)} elements")
    return np.array(elements)


def _lex_key(v: np.ndarray, tol: float) -> tuple:
    # coordinates within tol of each other compare equal
    return tuple(np.round(v / tol) * tol) if tol > 0 else tuple(v)


def _dedup(points: np.ndarray, tol: float) -> np.ndarray:
    kept: list[np.ndarray] = []
    for p in points:
        if not any(np.max(np.abs(p - q)) <= tol for q in kept):
            kept.append(p)
    return np.array(kept)


def icosahedral_orbit(seed) -> np.ndarray:
    """Distinct images of ``seed`` under Y, sorted lexicographically."""
    v = _as_seed(seed, 3)
    tol = EPS_DUP_REL * np.linalg.norm(v)
    images = _dedup(icosahedral_group() @ v, tol)
    order = sorted(range(len(images)), key=lambda i: _lex_key(images[i], tol))
    return images[order]


@dataclass(frozen=True, eq=False)
class GCluster:
    """Symmetric point set {+-v_1, ..., +-v_k} stored as the (k, d) array ``reps``."""

    reps: np.ndarray
    group: GroupSpec | None = None
    seeds: tuple = field(default=())

    def __post_init__(self):
        reps = np.array(self.reps, dtype=float)
        if reps.ndim != 2 or reps.shape[1] not in (2, 3):
            raise ClusterError(f"reps must be a (k, 2) or (k, 3) array, got shape {reps.shape}")
        if reps.shape[0] < reps.shape[1]:
            raise ClusterError(f"need k >= d, got k={reps.shape[0]}, d={reps.shape[1]}")
        reps.setflags(write=False)
        object.__setattr__(self, "reps", reps)

    @property
    def d(self) -> int:
        return self.reps.shape[1]

    @property
    def k(self) -> int:
        return self.reps.shape[0]

    def points(self) -> np.ndarray:
        """All 2k points: v_1..v_k followed by -v_1..-v_k."""
        return np.vstack([self.reps, -self.reps])

    def tolerance(self) -> float:
        return EPS_DUP_REL * float(np.max(np.linalg.norm(self.reps, axis=1)))

    def is_closed(self) -> bool:
        """Whether every group generator maps the symmetric set onto itself."""
        if self.group is None:
            raise ClusterError("cluster has no group attached")
        pts = self.points()
        tol = self.tolerance()
        for g in self.group.generators():
            for p in pts @ g.T:
                if not np.any(np.max(np.abs(pts - p), axis=1) <= tol):
                    return False
        return True


def _representatives(points: np.ndarray, tol: float) -> np.ndarray:
    # first member of each antipodal pair, in the given order
    reps: list[np.ndarray] = []
    for p in points:
        if not any(np.max(np.abs(p - q)) <= tol or np.max(np.abs(p + q)) <= tol for q in reps):
            reps.append(p)
    return np.array(reps)


def build_cluster(group: GroupSpec, seeds: Sequence) -> GCluster:
    """Union of the orbits of ``seeds``, one representative per +- pair.

    Cyclic orbits are walked in rotation order so that the representatives of
    a single-seed C_2m orbit are a^0(s), ..., a^(m-1)(s).  Icosahedral orbits
    are walked in descending lexicographic order, which keeps the
    lexicographically larger member of each pair.
    """
    seeds = list(seeds)
    if not seeds:
        raise ClusterError("at least one seed is required")
    d = group.d
    vecs = [_as_seed(s, d) for s in seeds]
    tol = EPS_DUP_REL * max(float(np.linalg.norm(v)) for v in vecs)
    walk = []
    for v in vecs:
        if group.kind == "cyclic":
            walk.extend(cyclic_orbit(group.n, v))
        else:
            orbit = icosahedral_orbit(v)
            walk.extend(orbit[::-1])
    reps = _representatives(np.array(walk), tol)
    if len(reps) == 0:  # pragma: no cover - seeds are nonzero
        raise ClusterError("empty cluster")
    return GCluster(reps, group, tuple(tuple(float(c) for c in v) for v in vecs))
