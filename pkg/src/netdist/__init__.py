"""Exact surface geodesics on the unit tetrahedron and unit cube.

Points live in per-face charts as (home, shared, x, y) quadruples; surface
distance is the minimum of closed-form candidate lengths over the finitely
many face paths that can carry a shortest path, with an unfolding engine
for reconstruction and two independent oracles for verification.
"""

from .model import (
    CUBE,
    SQRT3,
    TETRAHEDRON,
    DomainError,
    FaceRelabeling,
    InternalError,
    PolyhedronModel,
    build_model,
)
from .coords import (
    EPS,
    SurfacePoint,
    chart_cycle,
    chart_distance,
    classify,
    equivalent_points,
    flip_edge,
    reps_by_home,
    rotate_chart,
    same_point,
    validate_point,
    with_shared,
)
from .unfold import (
    Isometry,
    Trace,
    TraceSegment,
    Unfolding,
    cached_unfolding,
    enumerate_face_paths,
    reconstruct,
    trace,
    unfold,
)
from .distance import (
    SAME_FACE,
    CUBE_ADJACENT_PATTERNS,
    CUBE_OPPOSITE_PATTERNS,
    TET_PATTERNS,
    DistanceResult,
    Minimizer,
    cube_adjacent_path_lengths,
    cube_opposite_path_lengths,
    geodesics,
    surface_distance,
    tet_path_lengths,
)
from .oracle import SurfaceMesh, build_mesh, mesh_distance, unfold_distance
from .svgout import render_svg

__version__ = "0.1.0"

__all__ = [
    "CUBE",
    "CUBE_ADJACENT_PATTERNS",
    "CUBE_OPPOSITE_PATTERNS",
    "DistanceResult",
    "DomainError",
    "EPS",
    "FaceRelabeling",
    "InternalError",
    "Isometry",
    "Minimizer",
    "PolyhedronModel",
    "SAME_FACE",
    "SQRT3",
    "SurfaceMesh",
    "SurfacePoint",
    "TETRAHEDRON",
    "TET_PATTERNS",
    "Trace",
    "TraceSegment",
    "Unfolding",
    "build_mesh",
    "build_model",
    "cached_unfolding",
    "chart_cycle",
    "chart_distance",
    "classify",
    "cube_adjacent_path_lengths",
    "cube_opposite_path_lengths",
    "enumerate_face_paths",
    "equivalent_points",
    "flip_edge",
    "geodesics",
    "mesh_distance",
    "reconstruct",
    "reps_by_home",
    "rotate_chart",
    "render_svg",
    "same_point",
    "surface_distance",
    "tet_path_lengths",
    "trace",
    "unfold",
    "unfold_distance",
    "validate_point",
    "with_shared",
]
