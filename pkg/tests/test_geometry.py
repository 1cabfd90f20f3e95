import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubepath.geometry import (
    BASE_FACE,
    ConvexPolygon,
    DegenerateAngleError,
    HalfPlane,
    Point,
    angle_deg,
    area,
    clip,
    clip_all,
    intersect,
    reflect_axis,
    rotate_about,
    square,
)

coord = st.floats(-5, 5, allow_nan=False)
pts = st.builds(Point, coord, coord)


def test_rotate_examples():
    assert rotate_about(Point(2, 0), Point(0, 0), 90) == Point(0, 2)
    assert rotate_about(Point(2, 0), Point(0, 0), -90) == Point(0, -2)
    assert rotate_about(Point(4, 0), Point(3, 1), 90) == Point(4, 2)


def test_rotate_bad_sign():
    with pytest.raises(ValueError):
        rotate_about(Point(0, 0), Point(1, 1), 45)


def test_reflect_examples():
    assert reflect_axis(Point(0.5, 0.2), "x", 2.0) == Point(3.5, 0.2)
    assert reflect_axis(Point(0.5, 0.2), "y", -2.0) == Point(0.5, -4.2)
    with pytest.raises(ValueError):
        reflect_axis(Point(0, 0), "z", 1)


def test_angle_examples():
    assert angle_deg(Point(0, 0), Point(1, 0), Point(0, 1)) == pytest.approx(90)
    assert angle_deg(Point(0, 0), Point(1, 0), Point(-1, 0)) == pytest.approx(180)
    assert angle_deg(Point(0, 0), Point(1, 0), Point(-1, 1)) == pytest.approx(135)
    with pytest.raises(DegenerateAngleError):
        angle_deg(Point(0, 0), Point(0, 0), Point(1, 1))


def test_clip_half():
    left = clip(BASE_FACE, HalfPlane(1, 0, 0))  # x < 0
    assert area(left) == pytest.approx(2.0)
    assert area(clip(BASE_FACE, HalfPlane(1, 1, 0))) == pytest.approx(2.0)
    assert clip(BASE_FACE, HalfPlane(1, 0, -5)).empty


def test_degenerate_halfplane():
    assert clip(BASE_FACE, HalfPlane(0, 0, 1)) == BASE_FACE
    assert clip(BASE_FACE, HalfPlane(0, 0, 0)).empty
    assert clip(BASE_FACE, HalfPlane(0, 0, -1)).empty


def test_halfplane_slope_and_anchor():
    h = HalfPlane(2, -4, -10)
    assert h.slope() == pytest.approx(0.5)
    assert h.passes_through(Point(-3, 1))
    assert not h.passes_through(Point(-3, 1.01))
    assert HalfPlane(1, 0, 0).slope() == math.inf


def test_intersect_squares():
    a = square(-1, -1)
    b = square(0, 0)
    assert area(intersect(a, b)) == pytest.approx(1.0)
    assert intersect(a, square(5, 5)).empty


def test_polygon_queries():
    assert BASE_FACE.strictly_contains(Point(0, 0))
    assert not BASE_FACE.strictly_contains(Point(1, 0))
    assert BASE_FACE.distance_to(Point(3, 0)) == pytest.approx(2.0)
    assert BASE_FACE.distance_to(Point(0.2, 0.3)) == 0.0
    assert BASE_FACE.is_convex()
    assert ConvexPolygon().empty


@given(pts, pts, st.sampled_from([90, -90]))
def test_rotation_preserves_distance(p, c, sign):
    q = rotate_about(p, c, sign)
    assert q.dist(c) == pytest.approx(p.dist(c), abs=1e-9)
    # four quarter turns is the identity
    r = q
    for _ in range(3):
        r = rotate_about(r, c, sign)
    assert r.dist(p) <= 1e-9


halfplanes = st.builds(HalfPlane, coord, coord, coord)


@given(halfplanes)
def test_clip_idempotent_and_monotone(h):
    once = clip(BASE_FACE, h)
    twice = clip(once, h)
    assert area(twice) == pytest.approx(area(once), abs=1e-9)
    assert area(once) <= 4.0 + 1e-12
    assert once.is_convex()


@settings(max_examples=50)
@given(st.lists(halfplanes, max_size=4), halfplanes)
def test_more_halfplanes_never_grow(hs, extra):
    a = area(clip_all(BASE_FACE, hs))
    b = area(clip_all(BASE_FACE, hs + [extra]))
    assert b <= a + 1e-9
