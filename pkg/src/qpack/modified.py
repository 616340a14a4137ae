"""Modified strip projection: favour fully occupied cluster copies.

Centres of the standard fragment are scanned by decreasing occupation.  A
centre whose occupation exceeds p% of 2k is projected together with all of
its 2k lattice neighbours, in or out of the strip.  Any other centre is
projected only if it keeps a distance of at least ``delta`` from everything
projected so far.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cluster import GCluster
from .embed import project_phys
from .generate import (
    EPS_POS,
    Pattern,
    PointIndex,
    ProjectedPoint,
    config_snapshot,
    enumerate_fragment,
    neighbors,
    occupations,
    radius_gated,
)
from .strip import StripSpec


def min_cluster_distance(cluster: GCluster) -> float:
    """Smallest nonzero distance between two of the 2k points +-v_i."""
    pts = cluster.points()
    diff = pts[:, None, :] - pts[None, :, :]
    dist = np.sqrt(np.sum(diff**2, axis=-1))
    nz = dist[dist > cluster.tolerance()]
    return float(nz.min())


@dataclass(frozen=True, eq=False)
class ModifiedConfig:
    strip: StripSpec
    p: float = 50.0
    delta: float = 0.0
    eps_pos: float = EPS_POS

    def __post_init__(self):
        if not (0 < self.p <= 100):
            raise ValueError(f"p must lie in (0, 100], got {self.p}")
        if self.delta < 0 or math.isnan(self.delta):
            raise ValueError(f"delta must be >= 0, got {self.delta}")
        if self.delta < self.eps_pos:
            raise ValueError(
                f"delta={self.delta} is below the dedup tolerance eps_pos={self.eps_pos}"
            )

    @property
    def threshold(self) -> float:
        """Occupation strictly above this value triggers cluster completion."""
        return self.p * 2 * self.strip.k / 100.0


def default_delta(cluster: GCluster) -> float:
    return 0.5 * min_cluster_distance(cluster)


def generate_modified(cfg: ModifiedConfig) -> Pattern:
    spec = cfg.strip
    emb = spec.embedding
    frag = enumerate_fragment(spec)
    gated = radius_gated(spec, frag)
    occ = occupations(spec, gated)
    order = sorted(range(len(gated)), key=lambda i: (-int(occ[i]), gated[i]))

    dedup = PointIndex(cfg.eps_pos, emb.d)
    spacing = PointIndex(cfg.delta, emb.d)
    pts: list[ProjectedPoint] = []

    def emit(x, n, role):
        p = project_phys(emb, np.array(x, dtype=float))
        dedup.add(p)
        spacing.add(p)
        pts.append(ProjectedPoint(tuple(float(c) for c in p), x, int(n), role))

    for i in order:
        x, n = gated[i], int(occ[i])
        if n > cfg.threshold:
            if not dedup.near(project_phys(emb, np.array(x, dtype=float))):
                emit(x, n, "center")
            nbs = neighbors(x)
            nb_occ = occupations(spec, nbs)
            for y, m in zip(nbs, nb_occ):
                if not dedup.near(project_phys(emb, np.array(y, dtype=float))):
                    emit(y, m, "completion")
        else:
            p = project_phys(emb, np.array(x, dtype=float))
            if not spacing.near(p):
                emit(x, n, "admitted")

    return Pattern(
        pts,
        "modified",
        config_snapshot(spec, eps_pos=cfg.eps_pos, p=cfg.p, delta=cfg.delta),
        analysed=frag.analysed,
        truncated=frag.truncated,
    )
