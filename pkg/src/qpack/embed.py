"""Superspace embedding of a G-cluster.

Row a of ``w`` collects coordinate a of every representative, so the rows
w_1..w_d are mutually orthogonal with a common norm kappa whenever the
cluster is a genuine union of orbits.  Physical coordinates are the scaled
ones, <x, w_a>, which are kappa times the metric coordinates of the
orthogonal projection; divide by ``kappa`` to get the latter.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cluster import GCluster

EMBED_RTOL = 1e-9


class EmbeddingError(ValueError):
    """Raised when the w-rows are not orthogonal with equal norms."""


@dataclass(frozen=True, eq=False)
class Embedding:
    w: np.ndarray
    kappa: float

    @property
    def d(self) -> int:
        return self.w.shape[0]

    @property
    def k(self) -> int:
        return self.w.shape[1]

    @property
    def v(self) -> np.ndarray:
        """Cluster representatives as a (k, d) array (the columns of ``w``)."""
        return self.w.T

    def gram_defects(self) -> tuple[float, float]:
        """(max |<w_a, w_b>|, a != b;  max | ||w_a|| - kappa |)."""
        g = self.w @ self.w.T
        off = g - np.diag(np.diag(g))
        return float(np.max(np.abs(off))), float(np.max(np.abs(np.sqrt(np.diag(g)) - self.kappa)))


def embed(cluster: GCluster) -> Embedding:
    w = np.array(cluster.reps.T, dtype=float)
    w.setflags(write=False)
    kappa = float(np.linalg.norm(w[0]))
    emb = Embedding(w, kappa)
    if kappa <= 0:
        raise EmbeddingError("not a G-cluster embedding: zero norm")
    ortho, spread = emb.gram_defects()
    if ortho > EMBED_RTOL * kappa**2 or spread > EMBED_RTOL * kappa:
        raise EmbeddingError(
            f"not a G-cluster embedding: max |<w_a,w_b>| = {ortho:.3e}, "
            f"norm spread = {spread:.3e} (kappa = {kappa:.6g})"
        )
    return emb


def _check_len(emb: Embedding, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape[-1:] != (emb.k,):
        raise ValueError(f"expected length-{emb.k} vectors, got shape {x.shape}")
    return x


def project_phys(emb: Embedding, x) -> np.ndarray:
    """Scaled physical coordinates (<x, w_1>, ..., <x, w_d>); works on batches."""
    return _check_len(emb, x) @ emb.w.T


def project_perp(emb: Embedding, x) -> np.ndarray:
    """Component of ``x`` orthogonal to the physical subspace."""
    x = _check_len(emb, x)
    return x - (x @ emb.w.T) @ emb.w / emb.kappa**2
