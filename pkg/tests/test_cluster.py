import numpy as np
import pytest

from qpack.cluster import (
    TAU,
    ClusterError,
    GCluster,
    GroupSpec,
    build_cluster,
    cyclic_orbit,
    icosahedral_generators,
    icosahedral_group,
    icosahedral_orbit,
    rotation2d,
)

S3 = np.sqrt(3.0) / 2


def test_cyclic_orbit_twelve_is_j_ordered():
    orb = cyclic_orbit(12, (1, 0))
    j = np.arange(12)
    assert orb.shape == (12, 2)
    np.testing.assert_allclose(orb, np.c_[np.cos(j * np.pi / 6), np.sin(j * np.pi / 6)], atol=1e-15)


def test_cyclic_orbit_square():
    np.testing.assert_allclose(cyclic_orbit(4, (1, 0)), [(1, 0), (0, 1), (-1, 0), (0, -1)], atol=1e-15)


@pytest.mark.parametrize("n,seed", [(2, (1, 0)), (12, (0, 0)), (3.5, (1, 0))])
def test_cyclic_orbit_rejects(n, seed):
    with pytest.raises(ClusterError):
        cyclic_orbit(n, seed)


@pytest.mark.parametrize("n", [3, 5, 8, 10, 12])
def test_rotation_has_order_n(n):
    a = rotation2d(n)
    np.testing.assert_allclose(np.linalg.matrix_power(a, n), np.eye(2), atol=1e-12)


def test_c12_representatives_match_program_basis(c12):
    # the reference Fortran listing builds BASIS(:,J) = C12 * BASIS(:,J-1) from (1, 0)
    basis = [(1, 0), (S3, 0.5), (0.5, S3), (0, 1), (-0.5, S3), (-S3, 0.5)]
    assert c12.k == 6
    np.testing.assert_allclose(c12.reps, basis, atol=1e-15)


def test_icosahedral_generator_relations():
    a, b = icosahedral_generators()
    e = np.eye(3)
    np.testing.assert_allclose(np.linalg.matrix_power(a, 5), e, atol=1e-12)
    np.testing.assert_allclose(b @ b, e, atol=1e-12)
    np.testing.assert_allclose(np.linalg.matrix_power(a @ b, 3), e, atol=1e-12)
    np.testing.assert_allclose(a @ [1, 0, 0], [(TAU - 1) / 2, TAU / 2, -0.5])


def test_icosahedral_group_has_sixty_rotations():
    g = icosahedral_group()
    assert g.shape == (60, 3, 3)
    np.testing.assert_allclose(g[0], np.eye(3))
    for m in g:
        np.testing.assert_allclose(m @ m.T, np.eye(3), atol=1e-9)
        assert abs(np.linalg.det(m) - 1) < 1e-9
    # pairwise distinct
    flat = g.reshape(60, 9)
    dist = np.max(np.abs(flat[:, None] - flat[None]), axis=-1)
    assert np.all(dist[~np.eye(60, dtype=bool)] > 1e-6)


def test_group_preserves_icosahedron():
    ico = icosahedral_orbit((1, TAU, 0))
    for g in icosahedral_group():
        img = ico @ g.T
        d = np.max(np.abs(img[:, None] - ico[None]), axis=-1)
        assert np.all(d.min(axis=1) < 1e-9)


@pytest.mark.parametrize(
    "seed,size",
    [((1, TAU, 0), 12), ((1, 1, 1), 20), ((1, 0, 0), 30), ((0.3, 0.7, 1.9), 60)],
)
def test_icosahedral_orbit_lengths(seed, size):
    orb = icosahedral_orbit(seed)
    assert len(orb) == size
    assert np.all(np.diff(orb[:, 0]) >= -1e-9)  # lexicographic: first coordinate leads


def test_icosahedral_orbit_rejects_zero():
    with pytest.raises(ClusterError):
        icosahedral_orbit((0, 0, 0))


def test_three_shell_cluster():
    c = build_cluster(GroupSpec.icosahedral(), [(1, TAU, 0), (1, 1, 1), (1, 0, 0)])
    assert c.k == 31 and c.d == 3
    assert c.is_closed()


def test_square_cluster():
    c = build_cluster(GroupSpec.cyclic(4), [(1, 0)])
    np.testing.assert_allclose(c.reps, [(1, 0), (0, 1)], atol=1e-15)


def test_odd_cyclic_orbit_is_symmetrised():
    c = build_cluster(GroupSpec.cyclic(5), [(1, 0)])
    assert c.k == 5
    assert c.is_closed()


def test_coincident_seeds_merge():
    c = build_cluster(GroupSpec.cyclic(12), [(1, 0), (S3, 0.5), (-1, 0)])
    assert c.k == 6


def test_two_shell_cyclic():
    c = build_cluster(GroupSpec.cyclic(8), [(1, 0), (2 * np.cos(np.pi / 8), 2 * np.sin(np.pi / 8))])
    assert c.k == 8 and c.is_closed()


def test_icosahedral_reps_are_lexicographically_larger():
    c = build_cluster(GroupSpec.icosahedral(), [(1, 1, 1)])
    tol = 1e-9
    for v in c.reps:
        nz = v[np.abs(v) > tol]
        assert nz[0] > 0


def test_cluster_needs_seeds():
    with pytest.raises(ClusterError):
        build_cluster(GroupSpec.cyclic(8), [])


def test_gcluster_needs_k_at_least_d():
    with pytest.raises(ClusterError):
        GCluster(np.array([[1.0, 0.0, 0.0]]))


@pytest.mark.parametrize("kind,n", [("cyclic", 2), ("cyclic", None), ("dihedral", 4), ("icosahedral", 5)])
def test_bad_group_spec(kind, n):
    with pytest.raises(ClusterError):
        GroupSpec(kind, n)


def test_perturbed_cluster_not_closed(c12):
    reps = c12.reps.copy()
    reps[2] += 1e-3
    assert not GCluster(reps, c12.group).is_closed()
