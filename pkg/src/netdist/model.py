"""Combinatorial tables for the unit tetrahedron and the unit cube.

Faces are numbered from 1.  A vertex is identified by the frozenset of the
three face numbers meeting at it.  For every face the tables list its corner
vertices in counter-clockwise order together with the neighbor face across
each edge: edge k runs from corner k to corner k+1 (cyclically) and borders
``neighbors[k]``.  Charts, edge anchors and canonical relabelings are all
derived from these two tables; the test suite's reciprocity and witness
checks pin the tables down uniquely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

SQRT3 = math.sqrt(3.0)

TETRAHEDRON = "tetrahedron"
CUBE = "cube"


class DomainError(ValueError):
    """An argument lies outside an operation's documented domain."""


class InternalError(RuntimeError):
    """An internal invariant was violated (should never happen)."""


Vertex = frozenset


def _v(*faces: int) -> Vertex:
    return frozenset(faces)


_TET_CORNERS = {
    1: (_v(1, 2, 3), _v(1, 2, 4), _v(1, 3, 4)),
    2: (_v(1, 2, 3), _v(2, 3, 4), _v(1, 2, 4)),
    3: (_v(2, 3, 4), _v(1, 2, 3), _v(1, 3, 4)),
    4: (_v(1, 3, 4), _v(1, 2, 4), _v(2, 3, 4)),
}
_TET_NEIGHBORS = {
    1: (2, 4, 3),
    2: (3, 4, 1),
    3: (2, 1, 4),
    4: (1, 2, 3),
}

_CUBE_CORNERS = {
    1: (_v(1, 2, 3), _v(1, 2, 4), _v(1, 4, 5), _v(1, 3, 5)),
    2: (_v(2, 3, 6), _v(2, 4, 6), _v(1, 2, 4), _v(1, 2, 3)),
    3: (_v(2, 3, 6), _v(1, 2, 3), _v(1, 3, 5), _v(3, 5, 6)),
    4: (_v(1, 2, 4), _v(2, 4, 6), _v(4, 5, 6), _v(1, 4, 5)),
    5: (_v(1, 3, 5), _v(1, 4, 5), _v(4, 5, 6), _v(3, 5, 6)),
    6: (_v(3, 5, 6), _v(4, 5, 6), _v(2, 4, 6), _v(2, 3, 6)),
}
_CUBE_NEIGHBORS = {
    1: (2, 4, 5, 3),
    2: (6, 4, 1, 3),
    3: (2, 1, 5, 6),
    4: (2, 6, 5, 1),
    5: (1, 4, 6, 3),
    6: (5, 4, 2, 3),
}

# Chart corner positions for a face whose base edge runs corner0 -> corner1.
_TRIANGLE_XY = ((0.0, 0.0), (1.0, 0.0), (0.5, SQRT3 / 2.0))
_SQUARE_XY = ((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0))


@dataclass(frozen=True)
class FaceRelabeling:
    """Concrete faces assigned to the canonical slots 1..4 (tet) or 1..6 (cube).

    ``rel[i]`` is the face playing the i-th canonical role; slot patterns can
    be mapped to concrete face sequences with :meth:`faces`.
    """

    images: tuple[int, ...]

    def __getitem__(self, slot: int) -> int:
        return self.images[slot - 1]

    def faces(self, pattern: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(self.images[s - 1] for s in pattern)


@dataclass(frozen=True)
class PolyhedronModel:
    """Static face/vertex/adjacency tables for one solid.

    Immutable after construction; safe to share across threads.
    """

    kind: str
    corners: dict
    neighbors: dict

    @property
    def faces(self) -> tuple[int, ...]:
        return tuple(sorted(self.corners))

    @property
    def face_count(self) -> int:
        return len(self.corners)

    @property
    def gon(self) -> int:
        return 3 if self.kind == TETRAHEDRON else 4

    @property
    def rotation_steps(self) -> int:
        # unfoldings compose rotations in sixths (tet) or quarters (cube) of a turn
        return 6 if self.kind == TETRAHEDRON else 4

    def vertices(self) -> tuple[Vertex, ...]:
        seen = set()
        for face in self.faces:
            seen.update(self.corners[face])
        return tuple(sorted(seen, key=sorted))

    def check_face(self, face: int) -> None:
        if face not in self.corners:
            raise DomainError(f"unknown face F{face} for {self.kind}")

    def neighbors_ccw(self, face: int) -> tuple[int, ...]:
        self.check_face(face)
        return self.neighbors[face]

    def adjacent(self, a: int, b: int) -> bool:
        self.check_face(a)
        self.check_face(b)
        return b in self.neighbors[a]

    def opposite(self, face: int) -> int:
        if self.kind != CUBE:
            raise DomainError("only the cube has opposite faces")
        self.check_face(face)
        return 7 - face

    def shared_edge_index(self, home: int, shared: int) -> int:
        self.check_face(home)
        try:
            return self.neighbors[home].index(shared)
        except ValueError:
            raise DomainError(
                f"faces F{home} and F{shared} are not adjacent on the {self.kind}"
            ) from None

    def edge_anchors(self, home: int, shared: int) -> tuple[Vertex, Vertex]:
        """The two shared corners (u, v), with v directly after u going ccw
        around ``home``; the chart of (home, shared) pins u to (0,0) and v to
        (1,0)."""
        k = self.shared_edge_index(home, shared)
        cs = self.corners[home]
        return cs[k], cs[(k + 1) % self.gon]

    def ccw_next_shared(self, home: int, shared: int) -> int:
        k = self.shared_edge_index(home, shared)
        return self.neighbors[home][(k + 1) % self.gon]

    def chart_corners(self, home: int, shared: int):
        """Corner vertices of ``home`` with their chart coordinates, starting
        at the (0,0) anchor and proceeding ccw."""
        k = self.shared_edge_index(home, shared)
        cs = self.corners[home]
        xy = _TRIANGLE_XY if self.gon == 3 else _SQUARE_XY
        return tuple((cs[(k + i) % self.gon], xy[i]) for i in range(self.gon))

    def corner_position(self, home: int, shared: int, vertex: Vertex):
        for v, xy in self.chart_corners(home, shared):
            if v == vertex:
                return xy
        raise DomainError(f"{set(vertex)} is not a corner of F{home}")

    def vertex_faces(self, vertex: Vertex) -> tuple[int, ...]:
        faces = tuple(sorted(f for f in vertex if f in self.corners))
        if len(faces) != 3 or any(vertex not in self.corners[f] for f in faces):
            raise DomainError(f"{set(vertex)} is not a vertex of the {self.kind}")
        return faces

    def relabeling(self, n1: int, n2: int, rotation: int = 0) -> FaceRelabeling:
        """Canonical relabeling with face ``n1`` in slot 1.

        For adjacent ``n2`` (always, on the tetrahedron) slot 2 is ``n2``.
        For opposite cube faces ``n2`` takes slot 6 and ``rotation`` selects
        which neighbor of ``n1`` plays slot 2.
        """
        self.check_face(n1)
        self.check_face(n2)
        if n1 == n2:
            raise DomainError("relabeling needs two distinct faces")
        cyc = self.neighbors[n1]
        if self.kind == TETRAHEDRON:
            k = cyc.index(n2)
            c = cyc[k:] + cyc[:k]
            # ccw about slot 1 runs (slot2, slot4, slot3)
            return FaceRelabeling((n1, c[0], c[2], c[1]))
        if n2 == 7 - n1:
            if not 0 <= rotation < 4:
                raise DomainError("rotation must be in 0..3")
            k = rotation
        else:
            k = self.shared_edge_index(n1, n2)
        c = cyc[k:] + cyc[:k]
        # ccw about slot 1 runs (slot2, slot4, slot5, slot3)
        return FaceRelabeling((n1, c[0], c[3], c[1], c[2], 7 - n1))


@lru_cache(maxsize=None)
def build_model(kind: str) -> PolyhedronModel:
    """The fixed labeling of the requested solid (memoized singleton)."""
    if kind == TETRAHEDRON:
        return PolyhedronModel(kind, _TET_CORNERS, _TET_NEIGHBORS)
    if kind == CUBE:
        return PolyhedronModel(kind, _CUBE_CORNERS, _CUBE_NEIGHBORS)
    raise DomainError(f"unknown solid kind {kind!r}")
