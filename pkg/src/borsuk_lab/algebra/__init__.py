from .hull import (SpectrumApprox, convex_hull, hull_contains_zero, nearest_hull_point, signed_distance,
                   spectral_radius, spectrum)
from .logexp import pointwise_exp, principal_log
from .sampled import (GradingDecomposition, IndexAction, ProductGradingReport, SampledFunction,
                      apply_grading_operator, check_product_grading, check_root, decompose, eigen_residual,
                      permutation_order, project_component, root_of_unity, root_order)

__all__ = [
    "GradingDecomposition", "IndexAction", "ProductGradingReport", "SampledFunction", "SpectrumApprox",
    "apply_grading_operator", "check_product_grading", "check_root", "convex_hull", "decompose",
    "eigen_residual", "hull_contains_zero", "nearest_hull_point", "permutation_order", "pointwise_exp",
    "principal_log", "project_component", "root_of_unity", "root_order", "signed_distance", "spectral_radius", "spectrum",
]
