"""Diffraction intensity |sum_w exp(i <w, xi>)|^2 of a finite point set.

Positions are irrational combinations of the cluster vectors, so there is no
lattice to hand to an FFT; the sum is evaluated directly, O(L * cells).  On
a rectangular grid the exponential factorises per axis and the whole map is
one complex matrix product.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .generate import Pattern

THRESHOLD_RATIO = 1e-3


@dataclass(frozen=True)
class GridSpec:
    """Cells at xi = min + step * (i, j), 0 <= i < counts[0], 0 <= j < counts[1]."""

    min: tuple[float, float] = (-1.47, -1.47)
    step: float = 0.03
    counts: tuple[int, int] = (100, 100)

    def __post_init__(self):
        if not self.step > 0:
            raise ValueError(f"grid step must be positive, got {self.step}")
        if len(self.counts) != 2 or min(self.counts) < 1:
            raise ValueError(f"grid counts must be two integers >= 1, got {self.counts}")
        if len(self.min) != 2:
            raise ValueError("grid min must be a 2-vector")

    def axes(self) -> tuple[np.ndarray, np.ndarray]:
        xs = self.min[0] + self.step * np.arange(self.counts[0])
        ys = self.min[1] + self.step * np.arange(self.counts[1])
        return xs, ys

    def point(self, i: int, j: int) -> tuple[float, float]:
        return (self.min[0] + self.step * i, self.min[1] + self.step * j)


@dataclass(frozen=True, eq=False)
class DiffractionMap:
    grid: GridSpec
    intensity: np.ndarray  # (n_x, n_y)
    i0: float
    threshold_ratio: float = THRESHOLD_RATIO


def _positions(pattern) -> np.ndarray:
    if isinstance(pattern, Pattern):
        return pattern.positions()
    return np.atleast_2d(np.asarray(pattern, dtype=float))


def intensity(pattern, xi) -> float:
    """|sum over points w of exp(i <w, xi>)|^2 at one wave vector."""
    pos = _positions(pattern)
    if pos.size == 0:
        return 0.0
    xi = np.asarray(xi, dtype=float)
    if xi.shape != (pos.shape[1],):
        raise ValueError(f"xi must have length {pos.shape[1]}")
    phase = pos @ xi
    re = np.sum(np.cos(phase))
    im = np.sum(np.sin(phase))
    return float(re * re + im * im)


def diffraction_map(pattern, grid: GridSpec | None = None,
                    threshold_ratio: float = THRESHOLD_RATIO) -> DiffractionMap:
    """Intensity on ``grid``; 3D patterns are sampled in the plane xi_3 = 0."""
    grid = grid or GridSpec()
    if not 0 < threshold_ratio <= 1:
        raise ValueError(f"threshold_ratio must lie in (0, 1], got {threshold_ratio}")
    pos = _positions(pattern)
    xs, ys = grid.axes()
    if pos.size == 0:
        return DiffractionMap(grid, np.zeros(grid.counts), 0.0, threshold_ratio)
    ex = np.exp(1j * np.outer(xs, pos[:, 0]))  # (n_x, L)
    ey = np.exp(1j * np.outer(pos[:, 1], ys))  # (L, n_y)
    amp = ex @ ey
    inten = amp.real**2 + amp.imag**2
    i0 = intensity(pos, np.zeros(pos.shape[1]))
    return DiffractionMap(grid, inten, i0, threshold_ratio)


def extract_peaks(dmap: DiffractionMap) -> list[tuple[tuple[float, float], float]]:
    """Grid cells brighter than threshold_ratio * I(0), in grid-index order."""
    cut = dmap.threshold_ratio * dmap.i0
    out = []
    nx, ny = dmap.intensity.shape
    for i in range(nx):
        for j in range(ny):
            v = float(dmap.intensity[i, j])
            if v > cut:
                out.append((dmap.grid.point(i, j), v))
    return out
