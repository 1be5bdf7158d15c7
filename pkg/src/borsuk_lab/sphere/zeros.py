"""Symmetrized functions g = sum_i lam^i f(phi^i x) and their zeros on S^2."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ..algebra.sampled import SampledFunction, check_root, eigen_residual
from ..config import DEFAULT_LIMITS, DEFAULT_TOLERANCES, Limits, Tolerances
from ..errors import SymmetrizationError
from .expr import Expr
from .maps import FiniteOrderMap
from .mesh import IcosphereMesh, subdivide, symmetric_icosphere


def g_values(f: Expr, phi: FiniteOrderMap, lam: complex, points: np.ndarray) -> np.ndarray:
    """sum_{i<n} lam^i f(phi^i p) at each row p of points."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    out = np.zeros(len(pts), dtype=np.complex128)
    for i in range(phi.order):
        out += complex(lam) ** i * f.evaluate(phi.apply(pts, i))
    return out


def symmetrized_function(f: Expr, phi: FiniteOrderMap, lam: complex, mesh: IcosphereMesh,
                         tol: Tolerances = DEFAULT_TOLERANCES) -> SampledFunction:
    """Sample g on a phi-symmetric mesh and verify T(g) = lam^(n-1) g."""
    n = phi.order
    lam = check_root(lam, n, tol)
    if mesh.action is None or mesh.symmetry is None:
        raise SymmetrizationError("mesh carries no vertex action; symmetrize it first")
    if mesh.symmetry.order != n or np.max(np.abs(mesh.symmetry.matrix - phi.matrix)) > tol.orthogonality:
        raise SymmetrizationError("mesh was symmetrized for a different map")
    g = SampledFunction(g_values(f, phi, lam, mesh.vertices))
    resid = eigen_residual(g, mesh.action, lam ** (n - 1))
    if resid > tol.symmetrization * (1 + g.sup_norm()):
        raise SymmetrizationError(f"eigenvector residual {resid:.3g} too large; mesh not closed under phi")
    return g


@dataclass
class ZeroCertificate:
    point: np.ndarray
    residual: float
    cell_diameter: float
    iterations: int
    status: str                       # "OK" or "FAILED"
    trivial: bool = False             # zero forced by a fixed point of a power of phi
    history: list = field(default_factory=list)   # best residual after each round

    @property
    def ok(self) -> bool:
        return self.status == "OK"

    def kind(self) -> str:
        if not self.ok:
            return "failed"
        return "trivial fixed-point zero" if self.trivial else "essential zero"

    def to_dict(self, phi: FiniteOrderMap | None = None, lam: complex | None = None,
                f_source: str | None = None) -> dict:
        d = {
            "point": [float(c) for c in self.point],
            "residual": float(self.residual),
            "cell_diameter": float(self.cell_diameter),
            "iterations": int(self.iterations),
            "status": self.status,
        }
        if phi is not None:
            d["map"] = phi.describe()
        if lam is not None:
            d["lambda"] = [complex(lam).real, complex(lam).imag]
        if f_source is not None:
            d["f_source"] = f_source
        d["zero_kind"] = self.kind()
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(**kw))


def _triangle_origin_distance(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Distance from 0 to the complex triangles (a, b, c), plus barycentric weights of 0.

    Weights are NaN where the triangle is degenerate or does not contain 0.
    """
    def seg(p, q):
        d = q - p
        den = (d * d.conj()).real
        with np.errstate(invalid="ignore", divide="ignore"):
            t = np.where(den > 0, np.clip((-p * d.conj()).real / den, 0, 1), 0.0)
        return np.abs(p + t * d)

    dist = np.minimum(np.minimum(seg(a, b), seg(b, c)), seg(c, a))
    # barycentric coordinates of 0 via 2D cross products
    def cross(u, v):
        return (u.conj() * v).imag

    area = cross(b - a, c - a)
    with np.errstate(invalid="ignore", divide="ignore"):
        wa = cross(b, c) / area
        wb = cross(c, a) / area
        wc = cross(a, b) / area
    w = np.stack([wa, wb, wc], axis=1)
    inside = (np.abs(area) > 0) & np.all(w >= 0, axis=1)
    dist = np.where(inside, 0.0, dist)
    w[~inside] = np.nan
    return dist, w


def _normalize(p: np.ndarray) -> np.ndarray:
    return p / np.linalg.norm(p, axis=-1, keepdims=True)


def trivial_zero(point: np.ndarray, phi: FiniteOrderMap, lam: complex, atol: float = 1e-6) -> bool:
    """True if point is fixed by phi^d for a proper divisor d of n with lam^d != 1.

    At such a point the terms of g repeat in blocks of d and sum to zero whatever f is.
    """
    n = phi.order
    for d in range(1, n):
        if n % d == 0 and abs(complex(lam) ** d - 1) > 1e-9 and phi.is_fixed_by(point, d, atol):
            return True
    return False


@lru_cache(maxsize=32)
def _coarse_mesh(matrix_key: bytes, order: int, name: str, level: int) -> IcosphereMesh:
    phi = FiniteOrderMap(np.frombuffer(matrix_key).reshape(3, 3), order, name)
    return symmetric_icosphere(level, phi)


def coarse_mesh(phi: FiniteOrderMap, level: int) -> IcosphereMesh:
    return _coarse_mesh(phi.matrix.tobytes(), phi.order, phi.name, level)


def find_zero(f: Expr, phi: FiniteOrderMap, lam: complex, tol: float, coarse_level: int = 4,
              cells: int | None = None, max_iter: int | None = None,
              limits: Limits = DEFAULT_LIMITS) -> ZeroCertificate:
    """Adaptive multi-cell refinement of |g| on the sphere.

    Cells are ranked by the distance from 0 to the triangle spanned by the
    values of g at their corners (0 inside means a zero of the linear
    interpolant lies in the cell), ties broken by the smallest corner |g|.
    The best ``cells`` cells are split 1-to-4 each round.  Every round also
    evaluates corners, centroids and the interpolated zero of each retained
    cell; the best point seen is the certificate.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = cells or limits.zero_search_cells
    max_iter = limits.zero_search_iterations if max_iter is None else max_iter
    lam = check_root(lam, phi.order)
    mesh = coarse_mesh(phi, coarse_level)

    verts = mesh.vertices
    gv = g_values(f, phi, lam, verts)
    tri = verts[mesh.faces]                 # (F, 3, 3)
    vals = gv[mesh.faces]                   # (F, 3)

    k0 = int(np.argmin(np.abs(gv)))
    best_point, best_res = verts[k0].copy(), float(abs(gv[k0]))
    best_diam = mesh.max_edge_length()
    history: list[float] = []
    iterations = 0

    def rank(tri, vals):
        dist, w = _triangle_origin_distance(vals[:, 0], vals[:, 1], vals[:, 2])
        order = np.lexsort((np.min(np.abs(vals), axis=1), dist))
        return order[:m], w

    keep, w = rank(tri, vals)
    tri, vals, w = tri[keep], vals[keep], w[keep]

    while True:
        # candidates: centroid and interpolated zero of each retained cell
        cand = [_normalize(tri.mean(axis=1))]
        has_w = ~np.isnan(w[:, 0])
        if np.any(has_w):
            cand.append(_normalize(np.einsum("ck,ckd->cd", w[has_w], tri[has_w])))
        cand = np.vstack(cand)
        cv = np.abs(g_values(f, phi, lam, cand))
        corner = np.abs(vals).reshape(-1)
        pts = np.vstack([cand, tri.reshape(-1, 3)])
        allv = np.concatenate([cv, corner])
        k = int(np.argmin(allv))
        if allv[k] < best_res:
            best_res, best_point = float(allv[k]), pts[k].copy()
        diam = float(np.max(np.linalg.norm(tri - np.roll(tri, 1, axis=1), axis=2)))
        best_diam = diam
        history.append(best_res)
        if best_res < tol or iterations >= max_iter:
            break
        iterations += 1

        # split each retained cell into four
        a, b, c = tri[:, 0], tri[:, 1], tri[:, 2]
        ab, bc, ca = _normalize(a + b), _normalize(b + c), _normalize(c + a)
        children = np.concatenate([
            np.stack([a, ab, ca], axis=1), np.stack([b, bc, ab], axis=1),
            np.stack([c, ca, bc], axis=1), np.stack([ab, bc, ca], axis=1)])
        mids = np.concatenate([ab, bc, ca])
        mv = g_values(f, phi, lam, mids)
        nc = len(tri)
        gab, gbc, gca = mv[:nc], mv[nc:2 * nc], mv[2 * nc:]
        ga, gb, gc = vals[:, 0], vals[:, 1], vals[:, 2]
        child_vals = np.concatenate([
            np.stack([ga, gab, gca], axis=1), np.stack([gb, gbc, gab], axis=1),
            np.stack([gc, gca, gbc], axis=1), np.stack([gab, gbc, gca], axis=1)])
        keep, w = rank(children, child_vals)
        tri, vals, w = children[keep], child_vals[keep], w[keep]

    status = "OK" if best_res < tol else "FAILED"
    return ZeroCertificate(best_point, best_res, best_diam, iterations, status,
                           trivial_zero(best_point, phi, lam), history)


def min_abs_on_mesh(f: Expr, phi: FiniteOrderMap, lam: complex, level: int) -> tuple[float, np.ndarray]:
    """Dense sweep: smallest |g| over the vertices of the level-``level`` symmetrized icosphere."""
    mesh = coarse_mesh(phi, level)
    gv = np.abs(g_values(f, phi, lam, mesh.vertices))
    k = int(np.argmin(gv))
    return float(gv[k]), mesh.vertices[k]
