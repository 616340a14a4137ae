"""
Completing clusters: the modified projection
============================================

Points with a high occupation number already carry most of a cluster.  The
modified method scans points by decreasing occupation, completes every
cluster above p percent, and admits the rest only if they keep a minimum
distance delta from everything emitted so far.
"""

from __future__ import annotations

from collections import Counter

import qpack

cluster = qpack.build_cluster(qpack.GroupSpec.cyclic(12), [(1.0, 0.0)])
spec = qpack.make_strip(qpack.embed(cluster), t=0.1, R=9.0, cap=6000)

# Half of the cluster minimum distance keeps admission from merging points
# that are genuinely distinct.
delta = qpack.default_delta(cluster)
print("min cluster distance", qpack.min_cluster_distance(cluster), "delta", delta)

cfg = qpack.ModifiedConfig(spec, p=50.0, delta=delta)
print("completion threshold n >", cfg.threshold)
pattern = qpack.generate_modified(cfg)
print(len(pattern), "points;", dict(Counter(p.role for p in pattern)))

##############################################################################
# The result hardly depends on delta: anything between 0.3 and 0.7 of the
# minimum distance gives the same set.
md = qpack.min_cluster_distance(cluster)
for f in (0.3, 0.5, 0.7):
    n = len(qpack.generate_modified(qpack.ModifiedConfig(spec, 50.0, f * md)))
    print(f"delta = {f:.1f} * min_dist -> {n} points")
