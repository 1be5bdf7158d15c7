"""Discrete logarithm lifting along the mesh graph and loop winding numbers."""
from __future__ import annotations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import breadth_first_order

from ..algebra.sampled import SampledFunction
from ..config import DEFAULT_TOLERANCES, Tolerances
from ..errors import AliasingError, LabError, VanishingError
from .mesh import IcosphereMesh

TWO_PI = 2 * np.pi


class WindingFailure(LabError):
    """A face of the mesh has nonzero phase sum: g winds around 0 inside it."""

    def __init__(self, face: int, winding: int, vertices):
        super().__init__(f"face {face} {tuple(int(v) for v in vertices)} has winding {winding}")
        self.face = face
        self.winding = winding
        self.vertices = tuple(int(v) for v in vertices)


def face_windings(mesh: IcosphereMesh, g: SampledFunction) -> np.ndarray:
    """Integer winding of g around 0 along each face boundary (principal phase steps)."""
    v = g.values
    f = mesh.faces
    a, b, c = v[f[:, 0]], v[f[:, 1]], v[f[:, 2]]
    total = np.angle(b / a) + np.angle(c / b) + np.angle(a / c)
    return np.rint(total / TWO_PI).astype(int)


def unwrap_log(mesh: IcosphereMesh, g: SampledFunction, root: int = 0,
               tol: Tolerances = DEFAULT_TOLERANCES) -> SampledFunction:
    """Return h with exp(h) = g on the vertices, built breadth-first from ``root``.

    Each tree edge adds the principal log of g(child)/g(parent).  Raises
    :class:`WindingFailure` with the first face whose phase sum is not 0.
    """
    if g.sample_count != mesh.n_vertices:
        raise ValueError("g must be sampled on the mesh vertices")
    mod = np.abs(g.values)
    if np.min(mod) < tol.vanishing:
        k = int(np.argmin(mod))
        raise VanishingError(f"|g| = {mod[k]:.3g} at vertex {k}")

    wind = face_windings(mesh, g)
    bad = np.flatnonzero(wind)
    if len(bad):
        k = int(bad[0])
        raise WindingFailure(k, int(wind[k]), mesh.faces[k])

    e = mesh.edges
    nv = mesh.n_vertices
    adj = coo_matrix((np.ones(2 * len(e)), (np.r_[e[:, 0], e[:, 1]], np.r_[e[:, 1], e[:, 0]])), shape=(nv, nv))
    order, pred = breadth_first_order(adj.tocsr(), root, directed=False, return_predecessors=True)
    if len(order) != nv:
        raise ValueError("mesh edge graph is not connected")

    v = g.values
    h = np.empty(nv, dtype=np.complex128)
    h[root] = np.log(v[root])
    step = np.log(v[order[1:]] / v[pred[order[1:]]])
    parents = pred[order[1:]]
    for node, parent, s in zip(order[1:], parents, step):
        h[node] = h[parent] + s
    h = SampledFunction(h)

    resid = float(np.max(np.abs(np.exp(h.values) - v)))
    if resid > tol.lift_consistency * (1 + float(np.max(mod))):
        raise ArithmeticError(f"lift residual {resid:.3g} above tolerance")
    return h


def loop_winding(g: SampledFunction, loop) -> int:
    """Winding number of g around 0 along a closed cycle of sample indices."""
    idx = np.asarray(loop, dtype=np.int64)
    vals = g.values[idx]
    if np.any(vals == 0):
        raise VanishingError("g vanishes on the loop")
    steps = np.angle(np.roll(vals, -1) / vals)
    if np.any(np.abs(steps) >= np.pi):
        raise AliasingError("phase jump of at least pi along the loop; refine the mesh")
    return int(np.rint(np.sum(steps) / TWO_PI))


def equatorial_loop(mesh: IcosphereMesh, atol: float = 1e-9) -> np.ndarray:
    """Vertices on z = 0 ordered counter-clockwise seen from the north pole."""
    v = mesh.vertices
    idx = np.flatnonzero(np.abs(v[:, 2]) < atol)
    return idx[np.argsort(np.arctan2(v[idx, 1], v[idx, 0]))]
