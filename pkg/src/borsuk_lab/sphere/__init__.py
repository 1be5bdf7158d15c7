from .expr import Expr, parse_expr, random_trig_source
from .lifting import WindingFailure, equatorial_loop, face_windings, loop_winding, unwrap_log
from .maps import FiniteOrderMap, make_map, map_from_config, rotation_matrix
from .mesh import IcosphereMesh, build_icosphere, symmetric_icosphere, symmetrize_mesh
from .zeros import (ZeroCertificate, coarse_mesh, find_zero, g_values, min_abs_on_mesh, symmetrized_function,
                    trivial_zero)

__all__ = [
    "Expr", "FiniteOrderMap", "IcosphereMesh", "WindingFailure", "ZeroCertificate", "build_icosphere",
    "coarse_mesh", "equatorial_loop", "face_windings", "find_zero", "g_values", "loop_winding", "make_map",
    "map_from_config", "min_abs_on_mesh", "parse_expr", "random_trig_source", "rotation_matrix",
    "symmetric_icosphere", "symmetrize_mesh", "symmetrized_function", "trivial_zero", "unwrap_log",
]
