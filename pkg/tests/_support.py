"""Shared helpers for the test suite: seeded random surface points."""

from __future__ import annotations

import random

from netdist import SQRT3, PolyhedronModel, SurfacePoint


def random_interior(model: PolyhedronModel, rng: random.Random) -> SurfacePoint:
    home = rng.choice(model.faces)
    shared = rng.choice(model.neighbors_ccw(home))
    while True:
        x, y = rng.random(), rng.random()
        if model.kind == "cube" or y <= SQRT3 * min(x, 1.0 - x):
            return SurfacePoint(home, shared, x, y)


def random_edge(model: PolyhedronModel, rng: random.Random) -> SurfacePoint:
    home = rng.choice(model.faces)
    shared = rng.choice(model.neighbors_ccw(home))
    return SurfacePoint(home, shared, rng.random(), 0.0)


def random_vertex(model: PolyhedronModel, rng: random.Random) -> SurfacePoint:
    vtx = rng.choice(model.vertices())
    home = rng.choice(model.vertex_faces(vtx))
    shared = rng.choice(model.neighbors_ccw(home))
    x, y = model.corner_position(home, shared, vtx)
    return SurfacePoint(home, shared, x, y)


def random_point(model: PolyhedronModel, rng: random.Random,
                 boundary: float = 0.0) -> SurfacePoint:
    """Random valid point; ``boundary`` is the probability of drawing an
    edge or vertex point instead of an interior one."""
    u = rng.random()
    if u < boundary * 0.7:
        return random_edge(model, rng)
    if u < boundary:
        return random_vertex(model, rng)
    return random_interior(model, rng)


def random_mutual_pair(model: PolyhedronModel, rng: random.Random,
                       h1: int = 1, h2: int = 2):
    """A pair written in mutual charts (h1, h2, ...) and (h2, h1, ...)."""
    p1 = random_interior(model, rng)
    p2 = random_interior(model, rng)
    return (SurfacePoint(h1, h2, p1.x, p1.y), SurfacePoint(h2, h1, p2.x, p2.y))
