"""Surface points as (home, shared, x, y) quadruples and their conversions.

A point on the solid is written in the chart of its ``home`` face: the edge
bordering the adjacent ``shared`` face runs from (0,0) to (1,0) and the face
lies in the upper half-plane.  One surface point has several equivalent
quadruples; the functions here move between them (chart rotations, edge
flips, vertex multi-representations).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import CUBE, SQRT3, TETRAHEDRON, DomainError, PolyhedronModel

EPS = 1e-9


@dataclass(frozen=True)
class SurfacePoint:
    home: int
    shared: int
    x: float
    y: float

    def coords(self) -> tuple[float, float]:
        return (self.x, self.y)


def validate_point(model: PolyhedronModel, p: SurfacePoint) -> str | None:
    """None if ``p`` is a valid representation, else a message naming the
    violated constraint."""
    if p.home not in model.corners:
        return f"home face F{p.home} is not a face of the {model.kind}"
    if p.shared not in model.corners:
        return f"shared face F{p.shared} is not a face of the {model.kind}"
    if p.home == p.shared:
        return "home and shared faces must be distinct"
    if p.shared not in model.neighbors[p.home]:
        return f"home F{p.home} and shared F{p.shared} are not adjacent"
    x, y = p.x, p.y
    if model.kind == CUBE:
        if not -EPS <= x <= 1.0 + EPS:
            return f"x={x} outside [0, 1]"
        if not -EPS <= y <= 1.0 + EPS:
            return f"y={y} outside [0, 1]"
    else:
        if y < -EPS:
            return f"y={y} below the base edge"
        if y > SQRT3 * x + EPS:
            return f"({x}, {y}) violates y <= sqrt(3)*x"
        if y > SQRT3 * (1.0 - x) + EPS:
            return f"({x}, {y}) violates y <= sqrt(3)*(1-x)"
    return None


def require_valid(model: PolyhedronModel, p: SurfacePoint) -> None:
    msg = validate_point(model, p)
    if msg is not None:
        raise DomainError(msg)


def flip_edge(p: SurfacePoint) -> SurfacePoint:
    """Rewrite a point on the shared edge with the two faces swapped.

    Involution; requires y = 0 within tolerance.
    """
    if abs(p.y) > EPS:
        raise DomainError(f"edge flip needs y=0, got y={p.y}")
    return SurfacePoint(p.shared, p.home, 1.0 - p.x, 0.0)


def rotate_chart(model: PolyhedronModel, p: SurfacePoint) -> SurfacePoint:
    """Same point, same home face, shared face advanced one step ccw."""
    nxt = model.ccw_next_shared(p.home, p.shared)
    x, y = p.x, p.y
    if model.kind == TETRAHEDRON:
        return SurfacePoint(
            p.home, nxt, (1.0 - x + SQRT3 * y) / 2.0, (SQRT3 - SQRT3 * x - y) / 2.0
        )
    return SurfacePoint(p.home, nxt, y, 1.0 - x)


def chart_cycle(model: PolyhedronModel, p: SurfacePoint) -> list[SurfacePoint]:
    """All chart rotations of ``p``, starting with ``p`` itself."""
    out = [p]
    for _ in range(model.gon - 1):
        out.append(rotate_chart(model, out[-1]))
    return out


def with_shared(model: PolyhedronModel, p: SurfacePoint, shared: int) -> SurfacePoint:
    """Rotate ``p``'s chart until its shared face is ``shared``."""
    q = p
    for _ in range(model.gon):
        if q.shared == shared:
            return q
        q = rotate_chart(model, q)
    raise DomainError(f"F{shared} is not adjacent to home face F{p.home}")


def classify(model: PolyhedronModel, p: SurfacePoint):
    """('vertex', corner), ('edge', edge-aligned point) or ('interior', None).

    The edge case returns the rotation of ``p`` whose chart base edge carries
    the point, with y snapped to exactly 0.
    """
    for vtx, (cx, cy) in model.chart_corners(p.home, p.shared):
        if abs(p.x - cx) <= EPS and abs(p.y - cy) <= EPS:
            return "vertex", vtx
    for q in chart_cycle(model, p):
        if abs(q.y) <= EPS:
            return "edge", SurfacePoint(q.home, q.shared, min(max(q.x, 0.0), 1.0), 0.0)
    return "interior", None


def equivalent_points(model: PolyhedronModel, p: SurfacePoint) -> list[SurfacePoint]:
    """The complete equivalence class of ``p``, in a deterministic order
    that does not depend on which representative was passed in."""
    require_valid(model, p)
    kind, info = classify(model, p)
    if kind == "vertex":
        out = []
        for face in model.vertex_faces(info):
            for shared in model.neighbors_ccw(face):
                x, y = model.corner_position(face, shared, info)
                out.append(SurfacePoint(face, shared, x, y))
        return out
    if kind == "edge":
        sides = sorted((info, flip_edge(info)), key=lambda q: q.home)
    else:
        sides = [p]
    out = []
    for side in sides:
        first = with_shared(model, side, model.neighbors_ccw(side.home)[0])
        out.extend(chart_cycle(model, first))
    return out


def reps_by_home(model: PolyhedronModel, p: SurfacePoint) -> dict[int, SurfacePoint]:
    """One representative per admissible home face, keyed by face."""
    out: dict[int, SurfacePoint] = {}
    for q in equivalent_points(model, p):
        out.setdefault(q.home, q)
    return out


def same_point(model: PolyhedronModel, a: SurfacePoint, b: SurfacePoint,
               tol: float = EPS) -> bool:
    """True iff the two quadruples denote the same surface point."""
    require_valid(model, b)
    for q in equivalent_points(model, a):
        if (q.home == b.home and q.shared == b.shared
                and abs(q.x - b.x) <= tol and abs(q.y - b.y) <= tol):
            return True
    return False


def chart_distance(a: SurfacePoint, b: SurfacePoint) -> float:
    """Euclidean distance of two points written in the same chart."""
    if a.home != b.home or a.shared != b.shared:
        raise DomainError("chart distance needs both points in one chart")
    return math.hypot(a.x - b.x, a.y - b.y)
