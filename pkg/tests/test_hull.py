import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog

from borsuk_lab.algebra import (SampledFunction, convex_hull, hull_contains_zero, nearest_hull_point,
                                signed_distance, spectral_radius, spectrum)
from borsuk_lab.errors import EmptyInputError


def lp_contains_origin(pts: np.ndarray) -> bool:
    """0 in conv(pts) iff the weights w >= 0, sum w = 1, sum w p = 0 are feasible."""
    k = len(pts)
    a_eq = np.vstack([pts.T, np.ones(k)])
    res = linprog(np.zeros(k), A_eq=a_eq, b_eq=[0, 0, 1], bounds=[(0, None)] * k, method="highs")
    return res.status == 0


def brute_outside_distance(pts: np.ndarray) -> float:
    """Distance from 0 to conv(pts) when 0 is outside: the minimum over all point pairs' segments."""
    best = float(np.min(np.hypot(pts[:, 0], pts[:, 1])))
    for a, b in itertools.combinations(pts, 2):
        ab = b - a
        t = np.clip(-(a @ ab) / (ab @ ab), 0, 1)
        best = min(best, float(np.hypot(*(a + t * ab))))
    return best


def test_hull_soundness_against_lp():
    rng = np.random.default_rng(7)
    disagreements = 0
    for _ in range(1000):
        k = int(rng.integers(3, 12))
        pts = rng.normal(size=(k, 2)) + rng.normal(scale=1.5, size=2)
        d = signed_distance(convex_hull(pts))
        inside = lp_contains_origin(pts)
        if abs(d) > 1e-9:
            disagreements += (d < 0) != inside
        if d > 1e-9:
            assert abs(d - brute_outside_distance(pts)) < 1e-12
    assert disagreements == 0


def test_hull_vertices_are_input_points_and_ccw(rng):
    pts = rng.normal(size=(50, 2))
    h = convex_hull(pts)
    assert all(any(np.array_equal(v, p) for p in pts) for v in h)
    area2 = np.sum(h[:, 0] * np.roll(h[:, 1], -1) - np.roll(h[:, 0], -1) * h[:, 1])
    assert area2 > 0


def test_degenerate_hulls():
    seg = convex_hull([[-1, 0], [0, 0], [1, 0]])
    assert len(seg) == 2
    assert signed_distance(seg) == 0.0
    assert signed_distance(convex_hull([[3, 4]])) == 5.0
    assert signed_distance(convex_hull([[1, 1], [2, 2]])) == pytest.approx(np.sqrt(2))


def test_square_signed_distance():
    sq = convex_hull([[-1, -1], [1, -1], [1, 1], [-1, 1]])
    assert signed_distance(sq) == pytest.approx(-1.0)
    assert signed_distance(sq, (3, 0)) == pytest.approx(2.0)
    assert np.allclose(nearest_hull_point(sq, (3, 0.5)), [1, 0.5])


def test_spectrum_dedup_and_zero_test():
    f = SampledFunction([1, 1, 1j, -1, -1j, 1 + 1e-16])
    s = spectrum(f)
    assert len(s.points) == 4
    flag, d = hull_contains_zero(s)
    assert flag and d < 0


def test_zero_on_boundary_counts():
    flag, d = hull_contains_zero(spectrum(SampledFunction([0, 1, 1j])))
    assert flag and d == 0.0


def test_empty_spectrum():
    with pytest.raises(EmptyInputError):
        spectrum(SampledFunction(np.zeros(0)))


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), size=st.integers(1, 40))
def test_spectral_radius_submultiplicative(seed, size):
    rng = np.random.default_rng(seed)
    f = SampledFunction(rng.normal(size=size) + 1j * rng.normal(size=size))
    g = SampledFunction(rng.normal(size=size) + 1j * rng.normal(size=size))
    assert spectral_radius(f * g) <= spectral_radius(f) * spectral_radius(g) * (1 + 1e-15)
    assert spectral_radius(f) == pytest.approx(f.sup_norm())
