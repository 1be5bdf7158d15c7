"""Finite-order orthogonal self-maps of S^2."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..errors import ConfigurationError

MAX_ORDER = 64


@dataclass(frozen=True, eq=False)
class FiniteOrderMap:
    matrix: np.ndarray
    order: int
    name: str = "custom"

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.shape != (3, 3):
            raise ConfigurationError("map matrix must be 3x3")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_matrix(cls, matrix, name: str = "custom", tol: Tolerances = DEFAULT_TOLERANCES) -> "FiniteOrderMap":
        m = np.array(matrix, dtype=float)
        if m.shape != (3, 3):
            raise ConfigurationError("map matrix must be 3x3")
        if np.max(np.abs(m @ m.T - np.eye(3))) > tol.orthogonality:
            raise ConfigurationError("map matrix is not orthogonal")
        p = np.eye(3)
        for k in range(1, MAX_ORDER + 1):
            p = m @ p
            if np.max(np.abs(p - np.eye(3))) <= tol.orthogonality:
                return cls(m, k, name)
        raise ConfigurationError(f"map has no finite order <= {MAX_ORDER}")

    def power(self, k: int) -> np.ndarray:
        return np.linalg.matrix_power(self.matrix, k % self.order)

    def apply(self, points: np.ndarray, k: int = 1) -> np.ndarray:
        """phi^k applied to row vectors."""
        return np.asarray(points) @ self.power(k).T

    def is_fixed_by(self, point: np.ndarray, k: int = 1, atol: float = 1e-6) -> bool:
        return bool(np.linalg.norm(self.apply(point, k) - point) < atol)

    def describe(self) -> str:
        return self.name


def rotation_matrix(n: int, axis) -> np.ndarray:
    """Rotation by 2 pi / n about axis (Rodrigues)."""
    a = np.asarray(axis, dtype=float)
    a = a / np.linalg.norm(a)
    theta = 2 * np.pi / n
    k = np.array([[0, -a[2], a[1]], [a[2], 0, -a[0]], [-a[1], a[0], 0]])
    r = np.eye(3) + np.sin(theta) * k + (1 - np.cos(theta)) * (k @ k)
    # snap rounding noise on exactly representable entries (n = 2, 4 about coordinate axes)
    r[np.abs(r) < 1e-15] = 0.0
    return r


def make_map(kind: str, n: int | None = None, axis=(0.0, 0.0, 1.0)) -> FiniteOrderMap:
    """Build one of the built-in maps: ``antipodal``, ``example1`` or ``rotation``."""
    if kind == "antipodal":
        return FiniteOrderMap.from_matrix(-np.eye(3), name="antipodal")
    if kind == "example1":
        # (x, y, z) -> (-y, x, -z)
        m = [[0, -1, 0], [1, 0, 0], [0, 0, -1]]
        return FiniteOrderMap.from_matrix(m, name="example1")
    if kind == "rotation":
        if n is None or int(n) < 2:
            raise ConfigurationError("rotation needs an order n >= 2")
        fm = FiniteOrderMap.from_matrix(rotation_matrix(int(n), axis), name=f"rotation({int(n)})")
        if fm.order != int(n):
            raise ConfigurationError(f"rotation built with order {fm.order}, expected {n}")
        return fm
    raise ConfigurationError(f"unknown map kind {kind!r}")


def map_from_config(spec) -> FiniteOrderMap:
    """Accept ``"antipodal"``, ``{"kind": "rotation", "n": 5, "axis": [0, 0, 1]}`` or ``{"matrix": [...]}``."""
    if isinstance(spec, str):
        return make_map(spec)
    if isinstance(spec, dict):
        if "matrix" in spec:
            return FiniteOrderMap.from_matrix(spec["matrix"], name=spec.get("name", "custom"))
        return make_map(spec.get("kind", ""), spec.get("n"), spec.get("axis", (0.0, 0.0, 1.0)))
    raise ConfigurationError(f"cannot interpret map spec {spec!r}")
