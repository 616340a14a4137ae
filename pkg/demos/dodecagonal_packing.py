"""
Dodecagonal packing of a twelve-point cluster
=============================================

A regular dodecagon {±v_1, ..., ±v_6} lifts to the six-dimensional lattice
Z^6.  Lattice points whose translated unit cube meets the physical plane
project onto a quasiperiodic set in which every point is surrounded by a
(partial) copy of the dodecagon.
"""

from __future__ import annotations

import numpy as np

import qpack

# The cluster: the C12 orbit of (1, 0), stored as six representatives.
cluster = qpack.build_cluster(qpack.GroupSpec.cyclic(12), [(1.0, 0.0)])
print("representatives:\n", np.round(cluster.reps, 5))

# Embedding into R^6: the two w-rows are orthogonal with norm sqrt(3).
emb = qpack.embed(cluster)
print("kappa^2 =", emb.kappa**2)

##############################################################################
# The strip is translated by t = (0.1, ..., 0.1) so that no lattice point sits
# on a face.  Six thousand lattice points are analysed breadth first.
spec = qpack.make_strip(emb, t=0.1, R=9.0, cap=6000)
pattern = qpack.generate_standard(spec)
print(f"{pattern.analysed} analysed, {len(pattern)} projected points")

##############################################################################
# Occupation numbers count how many of the 12 cluster positions around a
# point are themselves occupied.
occ = pattern.occupations()
values, counts = np.unique(occ, return_counts=True)
for v, c in zip(values, counts):
    print(f"  n = {v:2d}: {c:4d} points")

# Neighbouring lattice points project exactly one cluster vector apart.
src = {p.source: np.array(p.phys) for p in pattern}
x = pattern.points[0].source
y = (x[0] + 1,) + x[1:]
if y in src:
    print("step along e1 moves by", np.round(src[y] - src[x], 12))
