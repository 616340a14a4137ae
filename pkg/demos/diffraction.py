"""
Diffraction of a dodecagonal fragment
=====================================

The diffraction intensity of a finite point set is |sum_j exp(i <xi, x_j>)|^2.
On the default 100 x 100 grid it shows twelvefold-symmetric Bragg peaks.
"""

from __future__ import annotations

import numpy as np

import qpack

cluster = qpack.build_cluster(qpack.GroupSpec.cyclic(12), [(1.0, 0.0)])
pattern = qpack.generate_standard(qpack.make_strip(qpack.embed(cluster), 0.1, 9.0, 6000))

dmap = qpack.diffraction_map(pattern)
print("grid", dmap.intensity.shape, "i0 =", dmap.i0, "= L^2 with L =", len(pattern))

peaks = qpack.extract_peaks(dmap)
print(len(peaks), "cells above", dmap.threshold_ratio, "* i0")

# The strongest peaks away from the origin.
far = [(xi, v) for xi, v in peaks if np.hypot(*xi) > 0.3]
for (x, y), v in sorted(far, key=lambda p: -p[1])[:6]:
    print(f"  xi = ({x:+.2f}, {y:+.2f})  I/i0 = {v / dmap.i0:.4f}")

# Intensity is even in xi: check one mirrored pair of grid cells.
print(qpack.intensity(pattern, (0.3, -0.6)), qpack.intensity(pattern, (-0.3, 0.6)))
