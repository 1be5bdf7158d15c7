"""Icosphere meshes and their symmetrization under a finite-order map."""
from __future__ import annotations

import json
from dataclasses import dataclass, replace

import numpy as np
from scipy.spatial import ConvexHull, cKDTree

from ..algebra.sampled import IndexAction
from ..config import DEFAULT_LIMITS, DEFAULT_TOLERANCES, Limits, Tolerances
from ..errors import RefinementError, ResourceError
from .maps import FiniteOrderMap

GOLDEN = (1 + 5**0.5) / 2


@dataclass(frozen=True, eq=False)
class IcosphereMesh:
    vertices: np.ndarray            # (V, 3) unit vectors
    faces: np.ndarray               # (F, 3) outward-oriented index triples
    level: int
    symmetry: FiniteOrderMap | None = None
    action: IndexAction | None = None

    @property
    def n_vertices(self) -> int:
        return self.vertices.shape[0]

    @property
    def edges(self) -> np.ndarray:
        e = np.concatenate([self.faces[:, [0, 1]], self.faces[:, [1, 2]], self.faces[:, [2, 0]]])
        return np.unique(np.sort(e, axis=1), axis=0)

    def euler_characteristic(self) -> int:
        return self.n_vertices - len(self.edges) + len(self.faces)

    def max_edge_length(self) -> float:
        e = self.edges
        return float(np.max(np.linalg.norm(self.vertices[e[:, 0]] - self.vertices[e[:, 1]], axis=1)))

    def to_json(self) -> str:
        return json.dumps({"vertices": self.vertices.tolist(), "faces": self.faces.tolist(), "level": self.level})

    @classmethod
    def from_json(cls, text: str) -> "IcosphereMesh":
        d = json.loads(text)
        return cls(np.array(d["vertices"], dtype=float), np.array(d["faces"], dtype=np.int64), int(d["level"]))


def _outward(vertices: np.ndarray, faces: np.ndarray) -> np.ndarray:
    a, b, c = (vertices[faces[:, k]] for k in range(3))
    normal = np.cross(b - a, c - a)
    flip = np.einsum("ij,ij->i", normal, a + b + c) < 0
    faces = faces.copy()
    faces[flip] = faces[flip][:, [0, 2, 1]]
    return faces


def _hull_faces(vertices: np.ndarray) -> np.ndarray:
    return _outward(vertices, np.asarray(ConvexHull(vertices).simplices, dtype=np.int64))


def icosahedron() -> tuple[np.ndarray, np.ndarray]:
    v = []
    for s1 in (-1, 1):
        for s2 in (-1, 1):
            v += [(0, s1, s2 * GOLDEN), (s1, s2 * GOLDEN, 0), (s2 * GOLDEN, 0, s1)]
    verts = np.array(v, dtype=float)
    verts /= np.linalg.norm(verts, axis=1, keepdims=True)
    return verts, _hull_faces(verts)


def subdivide(vertices: np.ndarray, faces: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """One round of 1-to-4 midpoint subdivision, new vertices pushed to the sphere.

    Old vertices keep their indices, so vertex sets are nested across levels.
    """
    nv = len(vertices)
    e = np.concatenate([faces[:, [0, 1]], faces[:, [1, 2]], faces[:, [2, 0]]])
    e_sorted = np.sort(e, axis=1)
    uniq, inv = np.unique(e_sorted, axis=0, return_inverse=True)
    inv = inv.reshape(-1)
    mid = vertices[uniq[:, 0]] + vertices[uniq[:, 1]]
    mid /= np.linalg.norm(mid, axis=1, keepdims=True)
    nf = len(faces)
    m01, m12, m20 = (inv[k * nf:(k + 1) * nf] + nv for k in range(3))
    a, b, c = faces[:, 0], faces[:, 1], faces[:, 2]
    new_faces = np.concatenate([
        np.column_stack([a, m01, m20]),
        np.column_stack([b, m12, m01]),
        np.column_stack([c, m20, m12]),
        np.column_stack([m01, m12, m20]),
    ])
    return np.vstack([vertices, mid]), new_faces


def build_icosphere(level: int, limits: Limits = DEFAULT_LIMITS) -> IcosphereMesh:
    if level < 0:
        raise ValueError("level must be >= 0")
    if level > limits.max_icosphere_level:
        raise ResourceError(f"icosphere level {level} above cap {limits.max_icosphere_level}")
    verts, faces = icosahedron()
    for _ in range(level):
        verts, faces = subdivide(verts, faces)
    return IcosphereMesh(verts, faces, level)


def _merge_close(points: np.ndarray, radius: float) -> np.ndarray:
    """Index of the representative (earliest close point) for each point."""
    tree = cKDTree(points)
    parent = np.arange(len(points))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in tree.query_pairs(radius, output_type="ndarray"):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    return np.array([find(i) for i in range(len(points))])


def symmetrize_mesh(mesh: IcosphereMesh, phi: FiniteOrderMap,
                    tol: Tolerances = DEFAULT_TOLERANCES) -> IcosphereMesh:
    """Close the vertex set under phi and re-triangulate; records phi as an IndexAction.

    Original vertices come first, so orbit closure of nested meshes stays nested.
    """
    n = phi.order
    cloud = np.vstack([phi.apply(mesh.vertices, k) for k in range(n)])
    rep = _merge_close(cloud, tol.orbit_merge)
    keep = np.flatnonzero(rep == np.arange(len(cloud)))
    verts = cloud[keep]
    verts = verts / np.linalg.norm(verts, axis=1, keepdims=True)

    tree = cKDTree(verts)
    dist, perm = tree.query(phi.apply(verts))
    if np.max(dist) > tol.orbit_merge:
        raise RefinementError("orbit closure failed: image of a vertex is not a vertex")
    action = IndexAction(perm)
    if n % action.order:
        raise RefinementError(f"vertex permutation order {action.order} does not divide map order {n}")

    if len(verts) == mesh.n_vertices:
        # already closed under phi (e.g. antipodal on an icosphere): keep the subdivision faces
        return replace(mesh, vertices=verts, symmetry=phi, action=action)
    faces = _hull_faces(verts)
    a, b, c = (verts[faces[:, k]] for k in range(3))
    area = 0.5 * np.linalg.norm(np.cross(b - a, c - a), axis=1)
    if np.min(area) < 1e-14:
        raise RefinementError("symmetrized mesh has degenerate faces; retry at a higher level")
    return replace(mesh, vertices=verts, faces=faces, symmetry=phi, action=action)


def symmetric_icosphere(level: int, phi: FiniteOrderMap, limits: Limits = DEFAULT_LIMITS,
                        tol: Tolerances = DEFAULT_TOLERANCES) -> IcosphereMesh:
    return symmetrize_mesh(build_icosphere(level, limits), phi, tol)
