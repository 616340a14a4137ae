"""
Icosahedral packings in three dimensions
========================================

A three-shell icosahedral cluster (icosahedron, dodecahedron and
icosidodecahedron, 62 points) needs a 31-dimensional superspace and 31465
families of parallel faces to describe its strip.
"""

from __future__ import annotations

import time

import numpy as np

import qpack

group = qpack.GroupSpec.icosahedral()
print(len(qpack.icosahedral_group()), "rotations")
for seed in [(1.0, qpack.TAU, 0.0), (1.0, 1.0, 1.0), (1.0, 0.0, 0.0)]:
    print(seed, "orbit of", len(qpack.icosahedral_orbit(seed)))

cluster = qpack.build_cluster(group, [(1.0, qpack.TAU, 0.0), (1.0, 1.0, 1.0), (1.0, 0.0, 0.0)])
emb = qpack.embed(cluster)
print("k =", emb.k, "kappa =", emb.kappa)

t0 = time.perf_counter()
cons = qpack.build_constraints(emb)
print(len(cons), "constraints,", sum(c.active for c in cons), "active,",
      f"{time.perf_counter() - t0:.1f}s")

##############################################################################
# A translation with incommensurate components avoids points sitting exactly
# on a face.  The fraction of analysed lattice points that land in the strip
# is small in 31 dimensions, so the analysed budget has to be generous.
t = 0.1 + 0.001 * np.sqrt(np.arange(1, 32))
for cap in (2000, 8000):
    spec = qpack.make_strip(emb, t, R=1e6, cap=cap)
    t0 = time.perf_counter()
    frag = qpack.enumerate_fragment(spec)
    print(f"cap {cap}: {len(frag.points)} in-strip points, {time.perf_counter() - t0:.1f}s")
