"""Central tolerance and resource defaults.

Every check in the package reads its threshold from a ``Tolerances`` record so
that a whole experiment can be re-run under different settings in one place.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    root_of_unity: float = 1e-9          # |lambda^n - 1|
    reconstruction: float = 1e-12        # relative to 1 + ||f||_inf
    idempotence: float = 1e-12
    eigen_relation: float = 1e-10
    product_grading: float = 1e-10
    dedup: float = 1e-14                 # spectrum point merging
    hull_zero: float = 0.0               # "contains" slack for hull_contains_zero
    log_roundtrip: float = 1e-12
    unit_norm: float = 1e-12
    orthogonality: float = 1e-12
    orbit_merge: float = 1e-9
    symmetrization: float = 1e-10
    vanishing: float = 1e-12             # min |g| before unwrap_log refuses
    lift_consistency: float = 1e-10


@dataclass(frozen=True)
class Limits:
    max_icosphere_level: int = 9
    max_norm_radius: int = 12
    max_convolution_terms: int = 10**6
    zero_search_cells: int = 8
    zero_search_iterations: int = 60
    power_iterations: int = 300


DEFAULT_TOLERANCES = Tolerances()
DEFAULT_LIMITS = Limits()
