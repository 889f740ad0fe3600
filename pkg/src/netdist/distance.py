"""Closed-form candidate path lengths and the surface-distance dispatcher.

For two faces in canonical mutual position there are finitely many face
paths that can carry a shortest surface path: 5 on the tetrahedron, 3
between adjacent cube faces and 12 between opposite cube faces.  Each has a
closed-form length in the two points' chart coordinates.  The dispatcher
evaluates the applicable family for every pair of home faces of the two
points (plus straight in-face candidates) and keeps the global minimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .model import SQRT3, TETRAHEDRON, DomainError, PolyhedronModel
from .coords import (
    SurfacePoint,
    chart_distance,
    reps_by_home,
    require_valid,
    with_shared,
)
from .unfold import Trace, TraceSegment, cached_unfolding, trace

SAME_FACE = "SAME_FACE"

# Slot patterns of each identifier, mapped to concrete faces through a
# canonical relabeling.
TET_PATTERNS = {
    1: (1, 2),
    2: (1, 3, 2),
    3: (1, 4, 2),
    4: (1, 3, 4, 2),
    5: (1, 4, 3, 2),
}
CUBE_ADJACENT_PATTERNS = {
    1: (1, 2),
    2: (1, 3, 2),
    3: (1, 4, 2),
}
CUBE_OPPOSITE_PATTERNS = {
    4: (1, 2, 6),
    5: (1, 3, 6),
    6: (1, 4, 6),
    7: (1, 5, 6),
    8: (1, 2, 3, 6),
    9: (1, 3, 5, 6),
    10: (1, 5, 4, 6),
    11: (1, 4, 2, 6),
    12: (1, 2, 4, 6),
    13: (1, 3, 2, 6),
    14: (1, 5, 3, 6),
    15: (1, 4, 5, 6),
}


def _require_mutual(p1: SurfacePoint, p2: SurfacePoint) -> None:
    if p1.home == p2.home or p1.shared != p2.home or p2.shared != p1.home:
        raise DomainError(
            "points must be written in mutual charts: "
            f"got ({p1.home},{p1.shared}) and ({p2.home},{p2.shared})"
        )


def tet_path_lengths(p1: SurfacePoint, p2: SurfacePoint):
    """The five tetrahedron candidate lengths, for p1=(A,B,x1,y1) and
    p2=(B,A,x2,y2)."""
    _require_mutual(p1, p2)
    x1, y1, x2, y2 = p1.x, p1.y, p2.x, p2.y
    return (
        math.hypot(x1 + x2 - 1.0, y1 + y2),
        math.hypot(x1 - x2 + 1.0, y1 - y2),
        math.hypot(x1 - x2 - 1.0, y1 - y2),
        math.hypot(x1 + x2, y1 + y2 - SQRT3),
        math.hypot(x1 + x2 - 2.0, y1 + y2 - SQRT3),
    )


def cube_adjacent_path_lengths(p1: SurfacePoint, p2: SurfacePoint):
    """The three adjacent-face cube candidate lengths (identifiers L1..L3)."""
    _require_mutual(p1, p2)
    if p1.home + p2.home == 7:
        raise DomainError("faces are opposite, not adjacent")
    x1, y1, x2, y2 = p1.x, p1.y, p2.x, p2.y
    return (
        math.hypot(x1 + x2 - 1.0, y1 + y2),
        math.hypot(x1 + y2, y1 - x2 + 1.0),
        math.hypot(x1 - y2 - 1.0, y1 + x2),
    )


def cube_opposite_path_lengths(p1: SurfacePoint, p2: SurfacePoint):
    """The twelve opposite-face cube candidate lengths (identifiers L4..L15),
    for p1 and p2 sharing the same shared face."""
    if p1.home + p2.home != 7:
        raise DomainError("faces are not opposite")
    if p1.shared != p2.shared:
        raise DomainError("points must share the same shared face")
    x1, y1, x2, y2 = p1.x, p1.y, p2.x, p2.y
    return (
        math.hypot(x1 + x2 - 1.0, y1 + y2 + 1.0),
        math.hypot(y1 - y2, x1 - x2 + 2.0),
        math.hypot(y1 - y2, x1 - x2 - 2.0),
        math.hypot(x1 + x2 - 1.0, y1 + y2 - 3.0),
        math.hypot(x1 + y2, y1 - x2 + 2.0),
        math.hypot(y1 + x2 - 2.0, x1 - y2 + 2.0),
        math.hypot(x1 + y2 - 2.0, y1 - x2 - 2.0),
        math.hypot(y1 + x2, x1 - y2 - 2.0),
        math.hypot(x1 - y2 - 1.0, y1 + x2 + 1.0),
        math.hypot(y1 - x2 + 1.0, x1 + y2 + 1.0),
        math.hypot(x1 - y2 + 1.0, y1 + x2 - 3.0),
        math.hypot(y1 - x2 - 1.0, x1 + y2 - 3.0),
    )


@dataclass(frozen=True)
class Minimizer:
    """One face path attaining the surface distance, with the aligned
    representation pair it was evaluated on."""

    ident: str
    faces: tuple[int, ...]
    p1: SurfacePoint
    p2: SurfacePoint

    def sort_key(self):
        rank = 0 if self.ident == SAME_FACE else int(self.ident[1:])
        return (rank, self.faces)


@dataclass
class DistanceResult:
    distance: float
    minimizers: list[Minimizer]
    geodesics: list[tuple[TraceSegment, ...]] | None = None
    values: dict[str, float] = field(default_factory=dict)


def _candidates(model: PolyhedronModel, q1: SurfacePoint, q2: SurfacePoint):
    r1 = reps_by_home(model, q1)
    r2 = reps_by_home(model, q2)
    cands: list[tuple[float, Minimizer]] = []
    for h1 in sorted(r1):
        a = r1[h1]
        for h2 in sorted(r2):
            b = r2[h2]
            if h1 == h2:
                bb = with_shared(model, b, a.shared)
                cands.append((chart_distance(a, bb),
                              Minimizer(SAME_FACE, (h1,), a, bb)))
            elif model.kind == TETRAHEDRON:
                aa = with_shared(model, a, h2)
                bb = with_shared(model, b, h1)
                rel = model.relabeling(h1, h2)
                for idx, v in zip(TET_PATTERNS, tet_path_lengths(aa, bb)):
                    cands.append((v, Minimizer(f"L{idx}", rel.faces(TET_PATTERNS[idx]), aa, bb)))
            elif h1 + h2 != 7:
                aa = with_shared(model, a, h2)
                bb = with_shared(model, b, h1)
                rel = model.relabeling(h1, h2)
                for idx, v in zip(CUBE_ADJACENT_PATTERNS, cube_adjacent_path_lengths(aa, bb)):
                    cands.append((v, Minimizer(f"L{idx}", rel.faces(CUBE_ADJACENT_PATTERNS[idx]), aa, bb)))
            else:
                shared0 = model.neighbors_ccw(h1)[0]
                aa = with_shared(model, a, shared0)
                bb = with_shared(model, b, shared0)
                rel = model.relabeling(h1, h2, rotation=0)
                for idx, v in zip(CUBE_OPPOSITE_PATTERNS, cube_opposite_path_lengths(aa, bb)):
                    cands.append((v, Minimizer(f"L{idx}", rel.faces(CUBE_OPPOSITE_PATTERNS[idx]), aa, bb)))
    return cands


def surface_distance(model: PolyhedronModel, q1: SurfacePoint, q2: SurfacePoint,
                     tol: float = 1e-9) -> DistanceResult:
    """Surface distance between two points, with every face path attaining
    the minimum (ties within ``tol``) reported."""
    require_valid(model, q1)
    require_valid(model, q2)
    cands = _candidates(model, q1, q2)
    dmin = min(v for v, _ in cands)

    values: dict[str, float] = {}
    for v, m in cands:
        if m.ident not in values or v < values[m.ident]:
            values[m.ident] = v

    mins: list[Minimizer] = []
    seen = set()
    for v, m in cands:
        if v <= dmin + tol:
            key = (m.ident, m.faces)
            if key not in seen:
                seen.add(key)
                mins.append(m)
    mins.sort(key=Minimizer.sort_key)
    return DistanceResult(dmin, mins, None, values)


def _minimizer_trace(model: PolyhedronModel, m: Minimizer) -> Trace:
    unf = cached_unfolding(model, m.faces, m.faces[0], m.p1.shared)
    return trace(unf, m.p1, m.p2)


def geodesics(model: PolyhedronModel, q1: SurfacePoint, q2: SurfacePoint,
              tol: float = 1e-9) -> DistanceResult:
    """Like :func:`surface_distance`, with the actual per-face geodesic
    segments reconstructed for every minimizer."""
    res = surface_distance(model, q1, q2, tol)
    kept: list[Minimizer] = []
    paths: list[tuple[TraceSegment, ...]] = []
    for m in res.minimizers:
        t = _minimizer_trace(model, m)
        if t.finite and abs(t.length - res.distance) <= max(tol, 1e-9):
            kept.append(m)
            paths.append(t.segments)
    if not kept:
        # cannot happen: the minimum is always attained by an honest path
        kept, paths = res.minimizers, [()] * len(res.minimizers)
    return DistanceResult(res.distance, kept, paths, res.values)
