import numpy as np
import pytest
from scipy.spatial import cKDTree

from borsuk_lab.errors import ConfigurationError, ResourceError
from borsuk_lab.sphere import (FiniteOrderMap, IcosphereMesh, build_icosphere, make_map, map_from_config,
                               rotation_matrix, symmetric_icosphere)


@pytest.mark.parametrize("level", [0, 1, 2, 3])
def test_icosphere_counts_and_topology(level):
    mesh = build_icosphere(level)
    assert mesh.n_vertices == 10 * 4**level + 2
    assert mesh.euler_characteristic() == 2
    assert np.allclose(np.linalg.norm(mesh.vertices, axis=1), 1.0, atol=1e-15)


def test_faces_point_outward():
    mesh = build_icosphere(2)
    v, f = mesh.vertices, mesh.faces
    a, b, c = v[f[:, 0]], v[f[:, 1]], v[f[:, 2]]
    assert np.all(np.einsum("ij,ij->i", np.cross(b - a, c - a), a + b + c) > 0)


def test_each_edge_shared_by_two_faces():
    mesh = build_icosphere(2)
    f = mesh.faces
    e = np.sort(np.concatenate([f[:, [0, 1]], f[:, [1, 2]], f[:, [2, 0]]]), axis=1)
    _, counts = np.unique(e, axis=0, return_counts=True)
    assert np.all(counts == 2)


def test_levels_are_nested():
    coarse, fine = build_icosphere(2), build_icosphere(3)
    assert np.array_equal(fine.vertices[: coarse.n_vertices], coarse.vertices)


def test_level_cap():
    with pytest.raises(ResourceError):
        build_icosphere(10)


def test_json_roundtrip():
    mesh = build_icosphere(1)
    back = IcosphereMesh.from_json(mesh.to_json())
    assert np.array_equal(back.vertices, mesh.vertices) and np.array_equal(back.faces, mesh.faces)


@pytest.mark.parametrize("spec", ["antipodal", "example1", {"kind": "rotation", "n": 3},
                                  {"kind": "rotation", "n": 5, "axis": [1, 1, 0]}])
def test_symmetrized_mesh_is_closed_under_map(spec):
    phi = map_from_config(spec)
    mesh = symmetric_icosphere(2, phi)
    assert mesh.euler_characteristic() == 2
    tree = cKDTree(mesh.vertices)
    d, idx = tree.query(phi.apply(mesh.vertices))
    assert np.max(d) < 1e-9
    assert np.array_equal(idx, mesh.action.permutation)
    assert phi.order % mesh.action.order == 0


def test_antipodal_keeps_icosphere():
    mesh = symmetric_icosphere(2, make_map("antipodal"))
    assert mesh.n_vertices == build_icosphere(2).n_vertices
    assert len(mesh.action.fixed_indices()) == 0


def test_example1_action_is_free_of_order_four(example1_mesh):
    assert example1_mesh.action.order == 4
    assert len(example1_mesh.action.fixed_indices()) == 0


def test_example1_matrix():
    phi = make_map("example1")
    assert phi.order == 4
    assert np.array_equal(phi.apply(np.array([1.0, 2.0, 3.0])), [-2.0, 1.0, -3.0])


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_rotation_orders(n):
    phi = make_map("rotation", n)
    assert phi.order == n
    assert phi.is_fixed_by(np.array([0, 0, 1.0]), 1)


def test_map_validation():
    with pytest.raises(ConfigurationError):
        FiniteOrderMap.from_matrix(np.diag([2.0, 1, 1]))
    with pytest.raises(ConfigurationError):
        # irrational rotation angle has no finite order
        c, s = np.cos(1.0), np.sin(1.0)
        FiniteOrderMap.from_matrix([[c, -s, 0], [s, c, 0], [0, 0, 1]])
    with pytest.raises(ConfigurationError):
        make_map("mirror")
    with pytest.raises(ConfigurationError):
        make_map("rotation", 1)


def test_rotation_matrix_is_orthogonal():
    r = rotation_matrix(7, [1, 2, 3])
    assert np.allclose(r @ r.T, np.eye(3), atol=1e-14)
