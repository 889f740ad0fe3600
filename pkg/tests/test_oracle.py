"""Oracle agreement: exhaustive honest search and mesh Dijkstra."""

import math
import random

import pytest

from netdist import (
    SurfacePoint,
    build_mesh,
    build_model,
    mesh_distance,
    surface_distance,
    unfold_distance,
)
from _support import random_interior, random_point

TET = build_model("tetrahedron")
CUBE = build_model("cube")


def test_unfold_oracle_tet_witness():
    d, argmin = unfold_distance(TET, SurfacePoint(1, 2, 0.5, 0.2), SurfacePoint(2, 1, 0.5, 0.2))
    assert d == pytest.approx(0.4, abs=1e-12)
    assert (1, 2) in argmin


def test_unfold_oracle_cube_opposite_vertices():
    d, _ = unfold_distance(CUBE, SurfacePoint(1, 2, 0.0, 0.0), SurfacePoint(6, 2, 0.0, 1.0), 6)
    assert d == pytest.approx(math.sqrt(5.0), abs=1e-9)


def test_unfold_oracle_matches_dispatcher():
    rng = random.Random(43)
    for model in (TET, CUBE):
        for _ in range(120):
            q1 = random_point(model, rng, 0.3)
            q2 = random_point(model, rng, 0.3)
            d = surface_distance(model, q1, q2).distance
            u, argmin = unfold_distance(model, q1, q2)
            assert u == pytest.approx(d, abs=1e-9)
            assert argmin


def test_longer_paths_never_help():
    rng = random.Random(47)
    for _ in range(60):
        q1 = random_point(CUBE, rng, 0.3)
        q2 = random_point(CUBE, rng, 0.3)
        d4 = unfold_distance(CUBE, q1, q2, 4)[0]
        d6 = unfold_distance(CUBE, q1, q2, 6)[0]
        assert d6 == pytest.approx(d4, abs=1e-9)


def test_tet_four_face_paths_win_for_witnesses():
    w = (10 * math.sqrt(3) - 1) / 20
    for x in (10 / 21, 11 / 21):
        p1 = SurfacePoint(1, 2, x, w)
        p2 = SurfacePoint(2, 1, x, w)
        d4 = unfold_distance(TET, p1, p2, 4)[0]
        d3 = unfold_distance(TET, p1, p2, 3)[0]
        assert d4 < d3 - 1e-6


def test_mesh_basic_values():
    assert mesh_distance(CUBE, SurfacePoint(1, 2, 0.5, 0.5), SurfacePoint(6, 2, 0.5, 0.5), 16) \
        == pytest.approx(2.0, abs=4 / 16)
    assert mesh_distance(TET, SurfacePoint(1, 2, 0.5, 0.2), SurfacePoint(2, 1, 0.5, 0.2), 16) \
        == pytest.approx(0.4, abs=4 / 16)
    p = SurfacePoint(1, 2, 0.25, 0.25)
    assert mesh_distance(CUBE, p, p, 8) == 0.0


def test_mesh_reference_values_n64():
    v = mesh_distance(CUBE, SurfacePoint(1, 2, 0.5, 0.5), SurfacePoint(6, 2, 0.5, 0.5), 64)
    assert 2.0 - 1e-9 <= v <= 2.0 + 4 / 64
    v = mesh_distance(TET, SurfacePoint(1, 2, 0.5, 0.2), SurfacePoint(2, 1, 0.5, 0.2), 64)
    assert abs(v - 0.4) <= 0.07


def test_mesh_snap_is_close():
    mesh = build_mesh(CUBE, 16)
    _, disp = mesh.snap(SurfacePoint(1, 2, 0.51, 0.49))
    assert disp <= math.sqrt(2.0) / 32 + 1e-12
    mesh = build_mesh(TET, 16)
    _, disp = mesh.snap(SurfacePoint(1, 2, 0.31, 0.27))
    assert disp <= 1 / 16


def test_mesh_nodes_identified_across_edges():
    mesh = build_mesh(CUBE, 4)
    # edge midpoints seen from either side snap to the same node
    a, _ = mesh.snap(SurfacePoint(1, 2, 0.5, 0.0))
    b, _ = mesh.snap(SurfacePoint(2, 1, 0.5, 0.0))
    assert a == b
    # corners seen from all three incident faces
    ids = {mesh.snap(SurfacePoint(h, s, 0.0, 0.0))[0]
           for h, s in ((1, 2), (2, 3), (3, 1))}
    assert len(ids) == 1
    # gluing count: 6 full grids minus duplicated edge-interior and corner nodes
    n = 4
    assert mesh.node_count == 6 * (n + 1) ** 2 - 12 * (n - 1) - 2 * 8


def test_mesh_convergence_small_sample():
    rng = random.Random(53)
    for model in (TET, CUBE):
        for n in (16, 32):
            for _ in range(6):
                q1 = random_interior(model, rng)
                q2 = random_interior(model, rng)
                d = surface_distance(model, q1, q2).distance
                m = mesh_distance(model, q1, q2, n)
                assert abs(m - d) <= 4 / n
                assert m >= d - 4 / n
