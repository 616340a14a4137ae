"""Cross-checks: determinant membership vs. the slice oracle, embedding defects."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .embed import EMBED_RTOL, Embedding
from .strip import StripSpec, in_strip_many, slice_oracle

GUARD = 1e-7


@dataclass
class Agreement:
    agree: int = 0
    disagree: int = 0
    skipped: int = 0
    inside: int = 0
    failures: list | None = None

    @property
    def checked(self) -> int:
        return self.agree + self.disagree


def boundary_distance(spec: StripSpec, y) -> np.ndarray:
    """min over active constraints of | bound - |det| | for each row of ``y``."""
    y = np.atleast_2d(np.asarray(y, dtype=float))
    if spec.n_active == 0:
        return np.full(len(y), np.inf)
    out = np.empty(len(y))
    step = max(1, 2_000_000 // spec.n_active)
    for s in range(0, len(y), step):
        det = np.einsum("bmj,mj->bm", y[s:s + step, spec._idx], spec._cof)
        out[s:s + step] = np.min(np.abs(spec._bound - np.abs(det)), axis=1)
    return out


def sample_points(spec: StripSpec, n: int, rng: np.random.Generator) -> np.ndarray:
    """Test points: a third uniform in [-1.5, 1.5]^k, a third close to E,
    a third pushed onto a randomly chosen constraint face (then jittered)."""
    emb = spec.embedding
    k = emb.k
    n1 = n // 3
    n2 = n // 3
    n3 = n - n1 - n2
    box = rng.uniform(-1.5, 1.5, size=(n1, k))

    alpha = rng.normal(size=(n2, emb.d)) * 3.0
    near_e = alpha @ emb.w / emb.kappa + rng.normal(size=(n2, k)) * rng.uniform(0.05, 0.6, size=(n2, 1))

    faces = rng.uniform(-1.0, 1.0, size=(n3, k))
    if spec.n_active:
        pick = rng.integers(spec.n_active, size=n3)
        for r, c in enumerate(pick):
            idx, cof, bound = spec._idx[c], spec._cof[c], spec._bound[c]
            y = faces[r]
            det = y[idx] @ cof
            target = np.sign(det or 1.0) * bound * (1.0 + rng.choice([-1, 1]) * 10 ** rng.uniform(-9, -2))
            y[idx] += (target - det) * cof / (cof @ cof)
    return np.vstack([box, near_e, faces])


def oracle_agreement(spec: StripSpec, ys, guard: float = GUARD, keep_failures: int = 10) -> Agreement:
    ys = np.atleast_2d(np.asarray(ys, dtype=float))
    fast = in_strip_many(spec, ys)
    dist = boundary_distance(spec, ys)
    out = Agreement(failures=[])
    for y, f, m in zip(ys, fast, dist):
        if m <= guard:
            out.skipped += 1
            continue
        slow = slice_oracle(spec.embedding, y)
        out.inside += bool(f)
        if slow == bool(f):
            out.agree += 1
        else:
            out.disagree += 1
            if len(out.failures) < keep_failures:
                out.failures.append((y.copy(), bool(f), slow))
    return out


def embedding_ok(emb: Embedding) -> bool:
    ortho, spread = emb.gram_defects()
    return ortho <= EMBED_RTOL * emb.kappa**2 and spread <= EMBED_RTOL * emb.kappa
