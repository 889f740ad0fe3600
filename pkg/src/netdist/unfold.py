"""Planar unfoldings of face paths and straight paths traced across them.

A face path is a simple path in the face-adjacency graph.  Unfolding lays
its faces out isometrically in the plane, chaining edge-to-edge rigid
motions outward from a base face whose chart is placed identically.
Rotations are exact multiples of a sixth (tetrahedron) or quarter (cube)
turn, taken from small sine/cosine tables so chained placements do not
drift; only translations accumulate in floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import SQRT3, DomainError, InternalError, PolyhedronModel
from .coords import EPS, SurfacePoint, with_shared

_TWO_PI = 2.0 * math.pi
_ROT_TABLES = {
    4: ((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)),
    6: (
        (1.0, 0.0),
        (0.5, SQRT3 / 2.0),
        (-0.5, SQRT3 / 2.0),
        (-1.0, 0.0),
        (-0.5, -SQRT3 / 2.0),
        (0.5, -SQRT3 / 2.0),
    ),
}

# slack for clipping / coverage decisions, in edge-length units
CLIP_EPS = 1e-9


@dataclass(frozen=True)
class Isometry:
    """Orientation-preserving motion: rotate by k steps, then translate."""

    steps: int
    k: int
    tx: float
    ty: float

    def apply(self, x: float, y: float) -> tuple[float, float]:
        c, s = _ROT_TABLES[self.steps][self.k]
        return (c * x - s * y + self.tx, s * x + c * y + self.ty)

    def invert(self, x: float, y: float) -> tuple[float, float]:
        c, s = _ROT_TABLES[self.steps][self.k]
        dx, dy = x - self.tx, y - self.ty
        return (c * dx + s * dy, c * dy - s * dx)


def _isometry_to(steps: int, origin, along) -> Isometry:
    """The isometry taking (0,0) to ``origin`` and (1,0) to ``along``."""
    dx, dy = along[0] - origin[0], along[1] - origin[1]
    k = round(math.atan2(dy, dx) * steps / _TWO_PI) % steps
    c, s = _ROT_TABLES[steps][k]
    if abs(c - dx) > 1e-6 or abs(s - dy) > 1e-6:
        raise InternalError(f"edge direction ({dx}, {dy}) off the rotation grid")
    return Isometry(steps, k, origin[0], origin[1])


@dataclass(frozen=True)
class Unfolding:
    """A face path laid out flat, with per-face placement isometries."""

    model: PolyhedronModel
    faces: tuple[int, ...]
    base_face: int
    base_shared: int
    chart_shared: dict
    placement: dict
    polygons: dict
    corner_pos: dict

    def place(self, p: SurfacePoint) -> tuple[float, float]:
        """Planar position of a point whose home face lies on the path."""
        if p.home not in self.placement:
            raise DomainError(f"home face F{p.home} is not on the unfolded path")
        q = with_shared(self.model, p, self.chart_shared[p.home])
        return self.placement[p.home].apply(q.x, q.y)


def unfold(model: PolyhedronModel, faces, base_face: int, base_shared: int) -> Unfolding:
    faces = tuple(faces)
    if not faces:
        raise DomainError("cannot unfold an empty face path")
    if len(set(faces)) != len(faces):
        raise DomainError(f"face path {faces} repeats a face")
    for a, b in zip(faces, faces[1:]):
        if not model.adjacent(a, b):
            raise DomainError(f"faces F{a} and F{b} are not adjacent")
    if base_face not in faces:
        raise DomainError(f"base face F{base_face} is not on the path {faces}")
    model.shared_edge_index(base_face, base_shared)

    steps = model.rotation_steps
    chart_shared: dict = {}
    placement: dict = {}
    polygons: dict = {}
    corner_pos: dict = {}

    def put(face: int, shared: int, iso: Isometry) -> None:
        chart_shared[face] = shared
        placement[face] = iso
        pts, pos = [], {}
        for vtx, xy in model.chart_corners(face, shared):
            q = iso.apply(*xy)
            pts.append(q)
            pos[vtx] = q
        polygons[face] = tuple(pts)
        corner_pos[face] = pos

    def attach(placed: int, new: int) -> None:
        u, v = model.edge_anchors(placed, new)
        # glue the (new, placed) chart along the shared edge, reversed
        iso = _isometry_to(steps, corner_pos[placed][v], corner_pos[placed][u])
        put(new, placed, iso)

    put(base_face, base_shared, Isometry(steps, 0, 0.0, 0.0))
    i = faces.index(base_face)
    for j in range(i + 1, len(faces)):
        attach(faces[j - 1], faces[j])
    for j in range(i - 1, -1, -1):
        attach(faces[j + 1], faces[j])
    return Unfolding(model, faces, base_face, base_shared,
                     chart_shared, placement, polygons, corner_pos)


_UNFOLD_CACHE: dict = {}


def cached_unfolding(model: PolyhedronModel, faces, base_face: int,
                     base_shared: int) -> Unfolding:
    key = (model.kind, tuple(faces), base_face, base_shared)
    unf = _UNFOLD_CACHE.get(key)
    if unf is None:
        unf = _UNFOLD_CACHE[key] = unfold(model, faces, base_face, base_shared)
    return unf


def enumerate_face_paths(model: PolyhedronModel, src: int, dst: int,
                         max_faces: int = 4) -> list[tuple[int, ...]]:
    """All simple dual-graph paths src -> dst of at most ``max_faces`` faces,
    in lexicographic order.

    The default bound 4 covers every face path that can carry a shortest
    surface path; larger bounds exist for falsification runs.
    """
    model.check_face(src)
    model.check_face(dst)
    if src == dst:
        raise DomainError("face paths need distinct endpoints")
    if max_faces < 2:
        raise DomainError("max_faces must be at least 2")
    out: list[tuple[int, ...]] = []
    path = [src]

    def go() -> None:
        last = path[-1]
        if last == dst:
            out.append(tuple(path))
            return
        if len(path) == max_faces:
            return
        for nb in sorted(model.neighbors_ccw(last)):
            if nb not in path:
                path.append(nb)
                go()
                path.pop()

    go()
    return sorted(out)


@dataclass(frozen=True)
class TraceSegment:
    """One face's share of a traced straight path.

    ``start``/``end`` are chart coordinates of the face's (face, shared)
    chart; the plane fields are the same points in the unfolding's plane.
    """

    face: int
    shared: int
    start: tuple[float, float]
    end: tuple[float, float]
    plane_start: tuple[float, float]
    plane_end: tuple[float, float]

    @property
    def length(self) -> float:
        return math.hypot(self.end[0] - self.start[0], self.end[1] - self.start[1])


@dataclass(frozen=True)
class Trace:
    """A straight path across an unfolding: its honest length (inf when the
    segment leaves the unfolded faces) and the per-face pieces."""

    length: float
    segments: tuple[TraceSegment, ...]

    @property
    def finite(self) -> bool:
        return math.isfinite(self.length)


def _clip_interval(poly, p1, d, tol_t):
    """Parameter interval of p1 + t*d, t in [0,1], inside a convex ccw
    polygon, or None.

    Interval ends are exact edge crossings; the slack ``tol_t`` only decides
    whether a sliver of intersection counts at all, so downstream pieces cut
    on true face boundaries.
    """
    t0, t1 = 0.0, 1.0
    n = len(poly)
    for i in range(n):
        ax, ay = poly[i]
        bx, by = poly[(i + 1) % n]
        ex, ey = bx - ax, by - ay
        c0 = ex * (p1[1] - ay) - ey * (p1[0] - ax)
        cd = ex * d[1] - ey * d[0]
        if abs(cd) < 1e-14:
            if c0 < -CLIP_EPS:
                return None
            continue
        tc = -c0 / cd
        if cd > 0.0:
            t0 = max(t0, tc)
        else:
            t1 = min(t1, tc)
        if t0 > t1 + tol_t:
            return None
    return (max(t0, 0.0), min(t1, 1.0))


def trace(unf: Unfolding, p1: SurfacePoint, p2: SurfacePoint) -> Trace:
    """Trace the straight segment between the placed points across the
    unfolding; length is inf unless the segment stays inside the faces."""
    P1 = unf.place(p1)
    P2 = unf.place(p2)
    d = (P2[0] - P1[0], P2[1] - P1[1])
    seglen = math.hypot(*d)
    model = unf.model

    if seglen <= EPS:
        q = with_shared(model, p1, unf.chart_shared[p1.home])
        seg = TraceSegment(p1.home, q.shared, q.coords(), q.coords(), P1, P1)
        return Trace(0.0, (seg,))

    tol_t = CLIP_EPS / seglen + 1e-12
    intervals = []
    for face in unf.faces:
        iv = _clip_interval(unf.polygons[face], P1, d, tol_t)
        if iv is not None and iv[1] - iv[0] > -tol_t:
            intervals.append((face, iv[0], iv[1]))

    cover = 0.0
    for _, t0, t1 in sorted(intervals, key=lambda it: it[1:]):
        if t0 > cover + tol_t:
            break
        cover = max(cover, t1)
    if cover < 1.0 - tol_t:
        return Trace(math.inf, ())

    # partition [0,1] greedily into per-face pieces, ordered along the segment
    order = {f: i for i, f in enumerate(unf.faces)}
    pieces = []
    t = 0.0
    while t < 1.0 - tol_t:
        best = None
        for face, t0, t1 in intervals:
            if t0 <= t + tol_t and t1 > t + tol_t:
                if best is None or t1 > best[1] + 1e-15 or (
                        abs(t1 - best[1]) <= 1e-15 and order[face] < order[best[0]]):
                    best = (face, t1)
        if best is None:
            return Trace(math.inf, ())
        face, t1 = best
        t1 = min(t1, 1.0)
        pieces.append((face, t, t1))
        t = t1

    if not pieces:
        raise InternalError("covered segment produced no pieces")

    segments = []
    for face, t0, t1 in pieces:
        a = (P1[0] + t0 * d[0], P1[1] + t0 * d[1])
        b = (P1[0] + t1 * d[0], P1[1] + t1 * d[1])
        iso = unf.placement[face]
        segments.append(TraceSegment(face, unf.chart_shared[face],
                                     iso.invert(*a), iso.invert(*b), a, b))
    return Trace(seglen, tuple(segments))


def reconstruct(unf: Unfolding, p1: SurfacePoint, p2: SurfacePoint) -> tuple[TraceSegment, ...]:
    """Per-face chart segments of a finite trace; error if the straight
    segment leaves the unfolding."""
    t = trace(unf, p1, p2)
    if not t.finite:
        raise DomainError("straight segment leaves the unfolded faces")
    return t.segments
