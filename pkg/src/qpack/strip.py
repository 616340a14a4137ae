"""Strip membership through (d+1)x(d+1) determinants.

The strip is E + [-1/2, 1/2]^k.  For every increasing tuple of d+1 column
indices, a point y lies between the two parallel faces labelled by that
tuple iff the determinant with first row (y_i1, ..., y_i{d+1}) and remaining
rows the w-rows at those columns is bounded in modulus by the largest value
the same determinant takes on the vertices {-1/2, 1/2}^{d+1}.  Expanding
along the first row turns each determinant into a dot product with a fixed
cofactor vector, so membership costs C(k, d+1) short dot products no matter
how large k is.

``slice_oracle`` answers the same question by a different route (is the
affine d-plane through y parallel to E hitting the unit cube?) and exists to
cross-check ``in_strip``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .embed import Embedding

EPS_DEG_REL = 1e-12
_CHUNK = 4096


@dataclass(frozen=True, eq=False)
class StripConstraint:
    indices: tuple[int, ...]
    cofactors: np.ndarray
    bound: float
    active: bool

    def determinant(self, y) -> float:
        y = np.asarray(y, dtype=float)
        return float(y[list(self.indices)] @ self.cofactors)


def _cofactor_table(emb: Embedding) -> tuple[np.ndarray, np.ndarray]:
    d, k = emb.d, emb.k
    combos = np.array(list(itertools.combinations(range(k), d + 1)), dtype=np.intp)
    combos = combos.reshape(-1, d + 1)
    cof = np.empty(combos.shape, dtype=float)
    for j in range(d + 1):
        cols = np.delete(combos, j, axis=1)  # (m, d)
        minors = np.transpose(emb.w[:, cols], (1, 0, 2))  # (m, d, d): rows = w-rows
        cof[:, j] = (-1) ** j * np.linalg.det(minors)
    return combos, cof


def build_constraints(emb: Embedding) -> list[StripConstraint]:
    """One constraint per increasing (d+1)-tuple of column indices (0-based)."""
    combos, cof = _cofactor_table(emb)
    bounds = 0.5 * np.abs(cof).sum(axis=1)
    eps = EPS_DEG_REL * emb.kappa**emb.d
    return [
        StripConstraint(tuple(int(i) for i in c), cf, float(b), bool(b > eps))
        for c, cf, b in zip(combos, cof, bounds)
    ]


@dataclass(frozen=True, eq=False)
class StripSpec:
    """Translated strip plus the enumeration knobs (radius ``R``, ``cap``).

    ``cap=None`` means no limit on analysed lattice points.
    """

    embedding: Embedding
    constraints: list[StripConstraint]
    t: np.ndarray
    R: float
    cap: int | None = 6000
    radius_space: str = "super"
    _idx: np.ndarray = field(init=False, repr=False)
    _cof: np.ndarray = field(init=False, repr=False)
    _bound: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        t = np.array(self.t, dtype=float).reshape(-1)
        if t.shape != (self.embedding.k,):
            raise ValueError(f"translation must have length {self.embedding.k}")
        if not self.R > 0:
            raise ValueError(f"R must be positive, got {self.R}")
        if self.cap is not None and self.cap < 1:
            raise ValueError(f"cap must be >= 1, got {self.cap}")
        if self.radius_space not in ("super", "physical"):
            raise ValueError(f"radius_space must be 'super' or 'physical', got {self.radius_space!r}")
        t.setflags(write=False)
        object.__setattr__(self, "t", t)
        act = [c for c in self.constraints if c.active]
        d1 = self.embedding.d + 1
        object.__setattr__(self, "_idx", np.array([c.indices for c in act], dtype=np.intp).reshape(-1, d1))
        object.__setattr__(self, "_cof", np.array([c.cofactors for c in act], dtype=float).reshape(-1, d1))
        object.__setattr__(self, "_bound", np.array([c.bound for c in act], dtype=float))

    @property
    def k(self) -> int:
        return self.embedding.k

    @property
    def n_active(self) -> int:
        return len(self._bound)


def make_strip(emb: Embedding, t=0.0, R: float = 9.0, cap: int | None = 6000,
               radius_space: str = "super") -> StripSpec:
    t = np.broadcast_to(np.asarray(t, dtype=float), (emb.k,)).copy()
    cons = build_constraints(emb)
    if len(cons) != comb(emb.k, emb.d + 1):  # pragma: no cover
        raise RuntimeError("constraint count mismatch")
    return StripSpec(emb, cons, t, float(R), cap, radius_space)


def _check_y(spec: StripSpec, y) -> np.ndarray:
    y = np.asarray(y, dtype=float)
    if y.shape[-1:] != (spec.k,):
        raise ValueError(f"expected length-{spec.k} vectors, got shape {y.shape}")
    return y


def in_strip(spec: StripSpec, y) -> bool:
    """Membership of the single point ``y`` (already shifted by -t)."""
    y = _check_y(spec, y)
    if y.ndim != 1:
        raise ValueError("in_strip takes one point; use in_strip_many for batches")
    for s in range(0, spec.n_active, _CHUNK):
        sl = slice(s, s + _CHUNK)
        det = np.einsum("mj,mj->m", y[spec._idx[sl]], spec._cof[sl])
        if np.any(np.abs(det) > spec._bound[sl]):
            return False
    return True


def strip_margins(spec: StripSpec, y) -> np.ndarray:
    """min over active constraints of (bound - |det|) for each row of ``y``.

    A point is in the strip iff its margin is >= 0.  Returns +inf when no
    constraint is active.
    """
    y = np.atleast_2d(_check_y(spec, y))
    out = np.full(len(y), np.inf)
    if spec.n_active == 0:
        return out
    step = max(1, 2_000_000 // max(spec.n_active, 1))
    for s in range(0, len(y), step):
        blk = y[s:s + step]
        det = np.einsum("bmj,mj->bm", blk[:, spec._idx], spec._cof)
        out[s:s + step] = np.min(spec._bound - np.abs(det), axis=1)
    return out


def in_strip_many(spec: StripSpec, y) -> np.ndarray:
    return strip_margins(spec, y) >= 0


# ---------------------------------------------------------------------------
# independent oracle


def _clip(poly: list[np.ndarray], n: np.ndarray, c: float, tol: float) -> list[np.ndarray]:
    """Clip a convex polygon (vertex list) to the half-plane n.a <= c."""
    out: list[np.ndarray] = []
    m = len(poly)
    for i in range(m):
        p, q = poly[i], poly[(i + 1) % m]
        fp, fq = n @ p - c, n @ q - c
        if fp <= tol:
            out.append(p)
        if (fp < -tol and fq > tol) or (fp > tol and fq < -tol):
            s = fp / (fp - fq)
            out.append(p + s * (q - p))
    return out


def _halfspaces(emb: Embedding, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # |y_i - <a, v_i>| <= 1/2  <=>  <v_i, a> <= y_i + 1/2  and  <-v_i, a> <= 1/2 - y_i
    v = emb.w.T
    normals = np.vstack([v, -v])
    rhs = np.concatenate([y + 0.5, 0.5 - y])
    return normals, rhs


def slice_oracle(emb: Embedding, y) -> bool:
    """Does {y - sum_a alpha_a w_a} meet [-1/2, 1/2]^k for some alpha in R^d?"""
    y = np.asarray(y, dtype=float)
    if y.shape != (emb.k,):
        raise ValueError(f"expected a length-{emb.k} vector, got shape {y.shape}")
    k, d = emb.k, emb.d
    perp = y - (emb.w @ y) @ emb.w / emb.kappa**2
    if np.linalg.norm(perp) > 0.5 * np.sqrt(k) * (1 + 1e-12):
        return False
    normals, rhs = _halfspaces(emb, y)
    # any feasible alpha has kappa*|alpha| = |W^T alpha| <= |y| + sqrt(k)/2
    box = (np.linalg.norm(y) + 0.5 * np.sqrt(k)) / emb.kappa + 1.0
    tol = 1e-12 * max(1.0, box * float(np.max(np.abs(emb.w))))

    alpha0 = emb.w @ y / emb.kappa**2
    if np.all(normals @ alpha0 <= rhs + tol):
        return True

    if d == 2:
        poly = [np.array(p, dtype=float) for p in ((-box, -box), (box, -box), (box, box), (-box, box))]
        for n, c in zip(normals, rhs):
            if not np.any(n):
                if c < -tol:
                    return False
                continue
            poly = _clip(poly, n, c, tol)
            if not poly:
                return False
        return True

    if d == 3:
        planes_n = np.vstack([normals, np.eye(3), -np.eye(3)])
        planes_c = np.concatenate([rhs, np.full(6, box)])
        tri = np.array(list(itertools.combinations(range(len(planes_n)), 3)), dtype=np.intp)
        A = planes_n[tri]  # (T, 3, 3)
        b = planes_c[tri]  # (T, 3)
        det = np.linalg.det(A)
        ok = np.abs(det) > 1e-12
        verts = np.linalg.solve(A[ok], b[ok][..., None])[..., 0]
        feas = np.all(verts @ planes_n.T <= planes_c + tol, axis=1)
        return bool(np.any(feas))

    raise ValueError(f"unsupported physical dimension {d}")
