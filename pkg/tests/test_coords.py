"""Representation conversions: validation, flips, chart rotations,
equivalence classes."""

import math
import random

import pytest

from netdist import (
    SQRT3,
    DomainError,
    SurfacePoint,
    build_model,
    chart_cycle,
    classify,
    equivalent_points,
    flip_edge,
    reps_by_home,
    rotate_chart,
    same_point,
    validate_point,
    with_shared,
)
from _support import random_edge, random_interior, random_point

TET = build_model("tetrahedron")
CUBE = build_model("cube")


def test_validate_examples():
    assert validate_point(CUBE, SurfacePoint(1, 2, 0.5, 0.5)) is None
    msg = validate_point(CUBE, SurfacePoint(1, 6, 0.5, 0.5))
    assert msg is not None and "adjacent" in msg
    msg = validate_point(TET, SurfacePoint(1, 2, 0.9, 0.8))
    assert msg is not None and "sqrt(3)*(1-x)" in msg
    assert validate_point(CUBE, SurfacePoint(1, 2, 1.5, 0.5)) is not None
    assert validate_point(CUBE, SurfacePoint(9, 2, 0.5, 0.5)) is not None


def test_flip_edge():
    p = SurfacePoint(1, 2, 0.3, 0.0)
    assert flip_edge(p) == SurfacePoint(2, 1, 0.7, 0.0)
    mid = SurfacePoint(1, 2, 0.5, 0.0)
    assert flip_edge(mid) == SurfacePoint(2, 1, 0.5, 0.0)
    with pytest.raises(DomainError):
        flip_edge(SurfacePoint(1, 2, 0.3, 0.2))


def test_flip_edge_is_involution():
    rng = random.Random(3)
    for model in (TET, CUBE):
        for _ in range(200):
            p = random_edge(model, rng)
            q = flip_edge(flip_edge(p))
            assert q.home == p.home and q.shared == p.shared
            assert abs(q.x - p.x) <= 1e-12 and q.y == 0.0


def test_rotate_chart_examples():
    q = rotate_chart(TET, SurfacePoint(1, 2, 0.5, SQRT3 / 6))
    assert (q.home, q.shared) == (1, 4)
    assert q.x == pytest.approx(0.5, abs=1e-15)
    assert q.y == pytest.approx(SQRT3 / 6, abs=1e-15)

    q = rotate_chart(TET, SurfacePoint(1, 2, 0.3, 0.2))
    assert (q.home, q.shared) == (1, 4)
    assert q.x == pytest.approx(0.5232050807568877, abs=1e-12)
    assert q.y == pytest.approx(0.5062177826491071, abs=1e-12)

    q = rotate_chart(CUBE, SurfacePoint(1, 2, 0.0, 0.0))
    assert q == SurfacePoint(1, 4, 0.0, 1.0)


def test_rotate_chart_order(subtests=None):
    rng = random.Random(5)
    for model, order in ((TET, 3), (CUBE, 4)):
        for _ in range(500):
            p = random_interior(model, rng)
            q = p
            for _ in range(order):
                q = rotate_chart(model, q)
            assert q.home == p.home and q.shared == p.shared
            assert abs(q.x - p.x) <= 1e-12
            assert abs(q.y - p.y) <= 1e-12


def test_rotate_chart_preserves_validity_and_chart_distance():
    rng = random.Random(8)
    for model in (TET, CUBE):
        for _ in range(300):
            a = random_interior(model, rng)
            b = SurfacePoint(a.home, a.shared, *random_interior(model, rng).coords())
            d0 = math.hypot(a.x - b.x, a.y - b.y)
            ra, rb = rotate_chart(model, a), rotate_chart(model, b)
            assert validate_point(model, ra) is None
            assert math.hypot(ra.x - rb.x, ra.y - rb.y) == pytest.approx(d0, abs=1e-12)


def test_classify():
    assert classify(CUBE, SurfacePoint(1, 2, 0.5, 0.5)) == ("interior", None)
    kind, info = classify(CUBE, SurfacePoint(1, 2, 0.3, 0.0))
    assert kind == "edge" and info == SurfacePoint(1, 2, 0.3, 0.0)
    kind, info = classify(CUBE, SurfacePoint(1, 2, 0.0, 0.0))
    assert kind == "vertex" and info == frozenset({1, 2, 3})
    kind, info = classify(TET, SurfacePoint(1, 2, 0.5, SQRT3 / 2))
    assert kind == "vertex" and info == frozenset({1, 3, 4})
    # edge point detected through a rotated chart: left edge of the triangle
    kind, info = classify(TET, SurfacePoint(1, 2, 0.25, SQRT3 / 4))
    assert kind == "edge" and (info.home, info.shared) == (1, 3)


def test_equivalence_class_sizes():
    assert len(equivalent_points(CUBE, SurfacePoint(1, 2, 0.5, 0.5))) == 4
    assert len(equivalent_points(CUBE, SurfacePoint(1, 2, 0.3, 0.0))) == 8
    assert len(equivalent_points(CUBE, SurfacePoint(1, 2, 0.0, 0.0))) == 12
    assert len(equivalent_points(TET, SurfacePoint(1, 2, 0.4, 0.3))) == 3
    assert len(equivalent_points(TET, SurfacePoint(1, 2, 0.3, 0.0))) == 6
    assert len(equivalent_points(TET, SurfacePoint(1, 2, 0.0, 0.0))) == 9


def test_equivalence_homes():
    homes = set(reps_by_home(CUBE, SurfacePoint(1, 2, 0.3, 0.0)))
    assert homes == {1, 2}
    homes = set(reps_by_home(CUBE, SurfacePoint(1, 2, 0.5, 0.5)))
    assert homes == {1}
    homes = set(reps_by_home(CUBE, SurfacePoint(1, 2, 0.0, 0.0)))
    assert homes == {1, 2, 3}


def test_tet_vertex_multi_representation():
    # the apex of the (1,2) chart is also representable from homes 3 and 4
    reps = equivalent_points(TET, SurfacePoint(1, 2, 0.5, SQRT3 / 2))
    def has(home, shared, x, y):
        return any(q.home == home and q.shared == shared
                   and abs(q.x - x) <= 1e-9 and abs(q.y - y) <= 1e-9
                   for q in reps)
    assert has(3, 2, 0.5, SQRT3 / 2)
    assert has(4, 2, 0.5, SQRT3 / 2)


def test_same_point():
    assert same_point(CUBE, SurfacePoint(1, 2, 0.3, 0.0), SurfacePoint(2, 1, 0.7, 0.0))
    assert not same_point(CUBE, SurfacePoint(1, 2, 0.5, 0.5), SurfacePoint(1, 2, 0.5, 0.4))
    assert same_point(CUBE, SurfacePoint(1, 2, 0.0, 0.0), SurfacePoint(2, 3, 0.0, 0.0))


def test_equivalence_closure():
    rng = random.Random(13)
    for model in (TET, CUBE):
        for _ in range(40):
            p = random_point(model, rng, boundary=0.5)
            reps = equivalent_points(model, p)
            for q in reps:
                assert validate_point(model, q) is None
                assert same_point(model, q, p)
                back = equivalent_points(model, q)
                assert len(back) == len(reps)
                for r, s in zip(back, reps):
                    assert r.home == s.home and r.shared == s.shared
                    assert abs(r.x - s.x) <= 1e-9 and abs(r.y - s.y) <= 1e-9


def test_with_shared():
    p = SurfacePoint(1, 2, 0.3, 0.2)
    q = with_shared(CUBE, p, 3)
    assert q.shared == 3
    assert with_shared(CUBE, p, 2) is p
    with pytest.raises(DomainError):
        with_shared(CUBE, p, 6)


def test_chart_cycle_lengths():
    assert len(chart_cycle(TET, SurfacePoint(1, 2, 0.4, 0.2))) == 3
    assert len(chart_cycle(CUBE, SurfacePoint(1, 2, 0.4, 0.2))) == 4
