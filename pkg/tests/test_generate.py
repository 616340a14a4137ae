import itertools

import numpy as np
import pytest

from qpack.cluster import GroupSpec, build_cluster
from qpack.embed import embed, project_phys
from qpack.generate import (
    PointIndex,
    enumerate_fragment,
    generate_standard,
    neighbors,
    occupation,
    round_half_away,
)
from qpack.strip import in_strip, in_strip_many, make_strip, slice_oracle


def box_scan(spec):
    """Every integer point with |x - t|_inf <= R + 1, filtered by membership and radius."""
    k = spec.k
    r = int(np.ceil(spec.R)) + 1
    lo = np.floor(spec.t - r).astype(int)
    axes = [np.arange(lo[i], lo[i] + 2 * r + 2) for i in range(k)]
    grid = np.array(list(itertools.product(*axes)), dtype=float)
    grid = grid[np.max(np.abs(grid - spec.t), axis=1) <= spec.R + 1]
    y = grid - spec.t
    keep = in_strip_many(spec, y) & (np.sum(y * y, axis=1) < spec.R**2)
    return {tuple(int(c) for c in x) for x in grid[keep]}


def test_round_half_away_from_zero():
    np.testing.assert_array_equal(round_half_away([0.5, -0.5, 1.5, -2.5, 0.1, -0.4]), [1, -1, 2, -3, 0, -0])


def test_neighbour_order():
    assert neighbors((0, 0)) == [(-1, 0), (1, 0), (0, -1), (0, 1)]


def test_fragment_starts_at_rounded_translation(fig3_spec):
    frag = enumerate_fragment(fig3_spec)
    assert frag.points[0] == (0,) * 6
    assert frag.analysed == 6000 and frag.truncated


def test_cap_one(c12_emb):
    frag = enumerate_fragment(make_strip(c12_emb, 0.1, 9.0, cap=1))
    assert frag.analysed == 1
    assert frag.points == [(0,) * 6]
    frag = enumerate_fragment(make_strip(c12_emb, [0.6, -0.5, 0, 0, 0, 1.4], 9.0, cap=1))
    assert frag.analysed == 1 and len(frag.points) <= 1


def test_origin_occupation_by_oracle(fig3_spec, c12_emb):
    # count the neighbours of 0 independently with the slice oracle
    by_oracle = sum(slice_oracle(c12_emb, np.array(nb, float) - fig3_spec.t) for nb in neighbors((0,) * 6))
    assert by_oracle == 10
    assert occupation(fig3_spec, (0,) * 6) == 10


def test_occupation_symmetry_without_translation(c12_emb, rng):
    spec = make_strip(c12_emb, 0.0, 9.0)
    for _ in range(50):
        x = tuple(int(c) for c in rng.integers(-3, 4, size=6))
        assert occupation(spec, x) == occupation(spec, tuple(-c for c in x))


def test_occupation_zero_far_away(fig3_spec):
    assert occupation(fig3_spec, (20, -20, 20, -20, 20, -20)) == 0


def test_empty_radius(c12_emb):
    pat = generate_standard(make_strip(c12_emb, 0.1, 1e-9))
    assert len(pat) == 0


def test_fig3_sources_sound(fig3_pattern, fig3_spec):
    for p in fig3_pattern:
        assert in_strip(fig3_spec, np.array(p.source, float) - fig3_spec.t)
        np.testing.assert_array_equal(p.phys, project_phys(fig3_spec.embedding, np.array(p.source, float)))
        assert 0 <= p.occupation <= 12
        assert p.occupation == occupation(fig3_spec, p.source)


def test_fig3_neighbour_in_cluster(fig3_pattern, c12):
    src = {p.source: np.array(p.phys) for p in fig3_pattern}
    pairs = 0
    for x, px in src.items():
        for i, s in itertools.product(range(6), (-1, 1)):
            y = list(x)
            y[i] += s
            y = tuple(y)
            if y in src:
                pairs += 1
                np.testing.assert_allclose(src[y] - px, s * c12.reps[i], atol=1e-12)
    assert pairs > 1000


def test_fig3_is_deterministic(fig3_spec, fig3_pattern):
    again = generate_standard(fig3_spec)
    assert again.points == fig3_pattern.points


def test_fig3_positions_distinct(fig3_pattern):
    pos = fig3_pattern.positions()
    d = np.sqrt(((pos[:, None] - pos[None]) ** 2).sum(-1))
    assert d[~np.eye(len(pos), dtype=bool)].min() > 1e-4


def test_physical_radius_option(c12_emb):
    spec = make_strip(c12_emb, 0.1, 4.0, 6000, radius_space="physical")
    pat = generate_standard(spec)
    assert len(pat) > 0
    assert all(np.hypot(*(np.array(p.phys) - project_phys(c12_emb, spec.t))) < 4.0 for p in pat)


@pytest.mark.parametrize(
    "group,seeds,t",
    [
        (GroupSpec.cyclic(4), [(1.0, 0.0)], [0.1, 0.2]),
        (GroupSpec.cyclic(8), [(1.0, 0.0)], [0.1, 0.2, 0.3, 0.05]),
        (GroupSpec.cyclic(8), [(1.0, 0.0)], 0.0),
    ],
)
def test_bfs_matches_box_scan(group, seeds, t):
    emb = embed(build_cluster(group, seeds))
    spec = make_strip(emb, t, 4.0, cap=None)
    frag = enumerate_fragment(spec)
    bfs = {x for x in frag.points if np.sum((np.array(x) - spec.t) ** 2) < spec.R**2}
    assert not frag.truncated
    assert bfs == box_scan(spec)


def test_point_index():
    idx = PointIndex(0.5, 2)
    idx.add(np.array([0.0, 0.0]))
    assert idx.near(np.array([0.3, 0.3]))
    assert not idx.near(np.array([0.5, 0.0]))
    assert idx.near(np.array([0.5, 0.0]), strict=False)
    inf = PointIndex(float("inf"), 2)
    assert not inf.near(np.zeros(2))
    inf.add(np.zeros(2))
    assert inf.near(np.array([1e9, 1e9]))
