"""Sampled spectrum, planar convex hull and signed distance of the origin."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..errors import EmptyInputError
from .sampled import SampledFunction


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: np.ndarray) -> np.ndarray:
    """Andrew's monotone chain; returns CCW hull vertices as an (h, 2) array.

    Collinear input gives the two extreme points, a single point gives one.
    """
    pts = np.unique(np.asarray(points, dtype=float).reshape(-1, 2), axis=0)
    if len(pts) <= 2:
        return pts
    plist = [tuple(p) for p in pts]  # np.unique sorts lexicographically
    lower: list = []
    for p in plist:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(plist):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return np.array(lower[:-1] + upper[:-1])


def _segment_distance(p: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    ab = b - a
    denom = float(ab @ ab)
    t = 0.0 if denom == 0 else min(1.0, max(0.0, float((p - a) @ ab) / denom))
    return float(np.hypot(*(a + t * ab - p)))


def signed_distance(hull: np.ndarray, point=(0.0, 0.0)) -> float:
    """Distance from point to the hull boundary, negative strictly inside."""
    p = np.asarray(point, dtype=float)
    h = np.asarray(hull, dtype=float)
    if len(h) == 0:
        raise EmptyInputError("empty hull")
    if len(h) == 1:
        return float(np.hypot(*(h[0] - p)))
    if len(h) == 2:
        return _segment_distance(p, h[0], h[1])
    edges = [(h[k], h[(k + 1) % len(h)]) for k in range(len(h))]
    dist = min(_segment_distance(p, a, b) for a, b in edges)
    inside = all(_cross(a, b, p) >= 0 for a, b in edges)
    return -dist if inside else dist


def nearest_hull_point(hull: np.ndarray, point=(0.0, 0.0)) -> np.ndarray:
    p = np.asarray(point, dtype=float)
    h = np.asarray(hull, dtype=float)
    if len(h) == 1:
        return h[0].copy()
    best, best_d = None, np.inf
    for k in range(len(h) if len(h) > 2 else 1):
        a, b = h[k], h[(k + 1) % len(h)]
        ab = b - a
        denom = float(ab @ ab)
        t = 0.0 if denom == 0 else min(1.0, max(0.0, float((p - a) @ ab) / denom))
        q = a + t * ab
        d = float(np.hypot(*(q - p)))
        if d < best_d:
            best, best_d = q, d
    return best


@dataclass(frozen=True, eq=False)
class SpectrumApprox:
    points: np.ndarray   # complex, deduplicated sampled range
    hull: np.ndarray     # (h, 2) CCW hull vertices in (Re, Im)

    @property
    def hull_complex(self) -> np.ndarray:
        return self.hull[:, 0] + 1j * self.hull[:, 1]


def spectrum(f: SampledFunction, tol: Tolerances = DEFAULT_TOLERANCES) -> SpectrumApprox:
    """Sampled value range of f with its convex hull."""
    if f.sample_count == 0:
        raise EmptyInputError("spectrum of an empty function")
    xy = np.column_stack([f.values.real, f.values.imag])
    keys = np.round(xy / tol.dedup)
    _, first = np.unique(keys, axis=0, return_index=True)
    first = np.sort(first)
    pts = f.values[first]
    return SpectrumApprox(pts, convex_hull(xy[first]))


def hull_contains_zero(s: SpectrumApprox, tolerance: float | None = None) -> tuple[bool, float]:
    """Return (flag, signed distance of 0 to the hull boundary); flag = distance <= tolerance."""
    if tolerance is None:
        tolerance = DEFAULT_TOLERANCES.hull_zero
    d = signed_distance(s.hull)
    return d <= tolerance, d


def spectral_radius(f: SampledFunction) -> float:
    if f.sample_count == 0:
        raise EmptyInputError("spectral radius of an empty function")
    return float(np.max(np.abs(f.values)))
