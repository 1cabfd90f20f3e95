import random

import pytest

from cubepath import solve
from cubepath.geometry import Point
from cubepath.oracle import (
    CubePose,
    brute_force_solve,
    grid_lattice,
    grid_region_sample,
    rest_face,
    rolled_image,
    target_sequences,
)
from cubepath.regions import region_set


def test_rest_faces():
    assert CubePose.start().down_face() == "bottom"
    assert rest_face("RU") == "back"
    assert rest_face("UR") == "right"
    assert rest_face("RU") != rest_face("UR")
    assert rest_face("RR") == rest_face("RUR") == "top"


def test_target_sequences():
    seqs = target_sequences(5)
    assert len(seqs) == 220
    assert {"RR", "DRD", "RUR"} <= set(seqs)
    assert all(rest_face(q) == "top" for q in seqs)


def test_rolled_image_example():
    assert rolled_image((0.5, 0.25), "RR") == pytest.approx((3.5, 0.25))
    with pytest.raises(ValueError):
        rolled_image((0, 0), "R")


def test_brute_force_examples():
    o = brute_force_solve((0.0, -0.9), (0.98, -0.8))
    assert o.best_length_sq == pytest.approx(5.9344, abs=1e-9)
    assert o.best_sequences == ("DRD",)
    assert o.faces == {4}
    o = brute_force_solve((0, 0), (0, 0))
    assert o.best_length_sq == pytest.approx(16.0)


def test_brute_force_agrees():
    rng = random.Random(8)
    for _ in range(1000):
        s = (rng.uniform(-1, 1), rng.uniform(-1, 1))
        t = (rng.uniform(-1, 1), rng.uniform(-1, 1))
        assert abs(brute_force_solve(s, t).best_length_sq - solve(s, t).length_sq) <= 1e-12


def test_grid_lattice():
    xs = grid_lattice(0.5)
    assert list(xs) == [-0.5, 0.0, 0.5]
    assert len(grid_lattice(0.5, interior=False)) == 5
    with pytest.raises(ValueError):
        grid_lattice(0.3)


def test_grid_region_sample_centre():
    count, total, mask = grid_region_sample((0, 0), 0.02)
    assert count == 0 and total == 99 * 99 and not mask


def test_grid_region_sample_matches_polygons():
    s = Point(0.0, -0.9)
    h = 0.01
    count, total, mask = grid_region_sample(s, h)
    rs = region_set(s)
    assert abs(count / total - rs.probability) <= 0.01
    for t in mask:
        assert rs.distance_to(t) <= 2 * h
