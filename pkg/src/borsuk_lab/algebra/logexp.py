"""Pointwise exponential and a hull-aware logarithm branch."""
from __future__ import annotations

import numpy as np

from ..errors import NoBranchError
from .hull import hull_contains_zero, nearest_hull_point, spectrum
from .sampled import SampledFunction


def pointwise_exp(f: SampledFunction) -> SampledFunction:
    return SampledFunction(np.exp(f.values))


def principal_log(f: SampledFunction) -> SampledFunction:
    """Logarithm of f with the branch cut opposite the hull's nearest point to 0.

    With u the unit vector towards the nearest hull point, every sample w has
    Re(w * conj(u)) > 0, so Log(w conj(u)) + i arg(u) is continuous on the hull.
    """
    s = spectrum(f)
    inside, dist = hull_contains_zero(s)
    if inside:
        raise NoBranchError(f"0 lies in the convex hull of the sampled spectrum (signed distance {dist:.3g})")
    p = nearest_hull_point(s.hull)
    u = complex(p[0], p[1])
    u /= abs(u)
    return SampledFunction(np.log(f.values * u.conjugate()) + 1j * np.angle(u))
