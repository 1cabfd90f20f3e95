import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubepath.geometry import Point, rotate_about
from cubepath.oracle import rolled_image
from cubepath.unfolding import (
    CANONICAL,
    FOUR_FACE,
    LS,
    PSEUDO,
    SYMMETRIES,
    THREE_FACE,
    UnsupportedSequenceError,
    apply_symmetry,
    apply_symmetry_seq,
    candidate,
    classify_path,
    corner_move_image,
    corner_move_sign,
    decision_angle,
    enumerate_nets,
    faces_of,
    image_by_construction,
    image_of_target,
    inverse_symmetry,
    matrix_tree_count,
    pivot_of,
    polyomino_ascii,
    sibling,
    spanning_trees,
    squared_length,
    strip_of,
)

inside = st.floats(-0.999, 0.999)
points = st.builds(Point, inside, inside)


@pytest.mark.parametrize("seq", CANONICAL)
def test_images_match_rolling_cube(seq):
    rng = random.Random(hash(seq) & 0xFFFF)
    for _ in range(200):
        t = Point(rng.uniform(-1, 1), rng.uniform(-1, 1))
        a = image_of_target(t, seq)
        b = rolled_image(t, seq)
        assert a.dist(b) <= 1e-12


@pytest.mark.parametrize("seq", CANONICAL)
def test_images_match_construction(seq):
    rng = random.Random(7)
    for _ in range(200):
        t = Point(rng.uniform(-1, 1), rng.uniform(-1, 1))
        assert image_of_target(t, seq).dist(image_by_construction(t, seq)) <= 1e-12


def test_image_examples():
    assert image_of_target((1, -1), "DD") == Point(1, -3)
    assert squared_length((0, -0.5), (0, 0), "DD") == pytest.approx(12.25)
    assert squared_length((-0.5, -0.5), (0, 0), "DRD") == pytest.approx(18.5)


def test_witness_lengths():
    s, t = (0.0, -0.9), (0.98, -0.8)
    want = {
        "DD": 6.2504, "RR": 9.1304, "LL": 24.8104, "UU": 33.4504,
        "RUR": 26.7264, "RDR": 10.2544, "LUL": 38.0944, "LDL": 14.5664,
        "URU": 23.2064, "ULU": 42.4144, "DRD": 5.9344, "DLD": 18.0864,
    }
    for seq, v in want.items():
        assert squared_length(s, t, seq) == pytest.approx(v, abs=1e-9), seq


def test_sequence_helpers():
    assert faces_of("RR") == 3 and faces_of("RUR") == 4
    assert sibling("RUR") == "RR" and sibling("DLD") == "DD"
    assert pivot_of("RUR") == (Point(3, 1), 90)
    assert pivot_of("DRD") == (Point(1, -3), 90)
    assert pivot_of("RDR")[1] == -90
    with pytest.raises(UnsupportedSequenceError):
        sibling("RR")
    with pytest.raises(UnsupportedSequenceError):
        image_of_target((0, 0), "RRU")


def test_strips():
    assert strip_of("RR").squares == ((-1, -1), (1, -1), (3, -1))
    assert strip_of("DRD").squares == ((-1, -1), (-1, -3), (1, -3), (1, -5))
    assert len(strip_of("RUR").lattice_vertices()) == 10


def test_classify_examples():
    assert classify_path((0, 0), (0.9, -0.9), "RUR") == (PSEUDO, None)
    assert classify_path((0, -0.9), (0.98, -0.8), "DRD") == (LS, 4)
    assert classify_path((0, 0), (0, 0), "RR") == (LS, 3)
    c = candidate((0, 0), (0, 0), "UU")
    assert c.is_ls and c.length == pytest.approx(4.0)


def test_decision_angle_example():
    assert decision_angle((0, 0), (3, 1), (4, 0)) == pytest.approx(116.56505117707799)


def test_corner_move_examples():
    # the DRD image is DD's image turned about (1,-3)
    t = Point(0.98, -0.8)
    pivot, sign = pivot_of("DRD")
    assert corner_move_image(image_of_target(t, "DD"), pivot, sign).dist(image_of_target(t, "DRD")) <= 1e-12
    assert corner_move_sign((0, 0), (3, 1), (4, 0)) in (90, -90)


@pytest.mark.parametrize("seq4", FOUR_FACE)
def test_corner_move_relates_siblings(seq4):
    rng = random.Random(3)
    pivot, sign = pivot_of(seq4)
    for _ in range(100):
        t = Point(rng.uniform(-1, 1), rng.uniform(-1, 1))
        moved = rotate_about(image_of_target(t, sibling(seq4)), pivot, sign)
        assert moved.dist(image_of_target(t, seq4)) <= 1e-12


def test_corner_move_example_farther():
    moved = corner_move_image((4, 0), (3, 1), corner_move_sign((0, 0), (3, 1), (4, 0)))
    assert moved == Point(4, 2)
    assert moved.dist(Point(0, 0)) == pytest.approx(20**0.5)


def test_corner_move_equal_at_135():
    # S on the ray at 135 degrees from the image direction
    pivot = Point(3.0, 1.0)
    img = Point(4.0, 1.0)
    s = Point(pivot.x - 2.0, pivot.y + 2.0)
    assert decision_angle(s, pivot, img) == pytest.approx(135.0, abs=1e-12)
    moved = corner_move_image(img, pivot, corner_move_sign(s, pivot, img))
    assert moved.dist(s) == pytest.approx(img.dist(s), abs=1e-12)


@given(points, st.floats(-6, 6), st.floats(-6, 6), st.sampled_from(FOUR_FACE))
def test_corner_move_monotone(s, ix, iy, seq4):
    pivot, _ = pivot_of(seq4)
    img = Point(ix, iy)
    if img.dist(pivot) < 1e-3:
        return
    ang = decision_angle(s, pivot, img)
    moved = corner_move_image(img, pivot, corner_move_sign(s, pivot, img))
    before, after = img.dist(s), moved.dist(s)
    if abs(ang - 135) < 1e-9:
        assert after == pytest.approx(before, abs=1e-9)
    elif ang > 135:
        assert after < before
    else:
        assert after > before


def test_pseudopaths_are_beaten():
    # every pseudopath has a strictly shorter candidate
    rng = random.Random(21)
    for _ in range(10_000):
        s = Point(rng.uniform(-1, 1), rng.uniform(-1, 1))
        t = Point(rng.uniform(-1, 1), rng.uniform(-1, 1))
        cands = [candidate(s, t, q) for q in CANONICAL]
        best_ls = min(c.length_sq for c in cands if c.is_ls)
        for c in cands:
            if not c.is_ls:
                assert c.length_sq > best_ls


@given(points, points, st.sampled_from(SYMMETRIES), st.sampled_from(CANONICAL))
def test_symmetry_equivariance(s, t, g, seq):
    gs, gt = apply_symmetry(g, s), apply_symmetry(g, t)
    gseq = apply_symmetry_seq(g, seq)
    assert squared_length(gs, gt, gseq) == pytest.approx(squared_length(s, t, seq), abs=1e-9)


def test_symmetry_inverse():
    for g in SYMMETRIES:
        gi = inverse_symmetry(g)
        assert apply_symmetry(gi, apply_symmetry(g, (0.3, -0.7))) == pytest.approx((0.3, -0.7))
        assert apply_symmetry_seq(gi, apply_symmetry_seq(g, "RUR")) == "RUR"
    assert sorted(apply_symmetry_seq(g, "RR") for g in SYMMETRIES) == sorted(THREE_FACE * 2)


def test_nets():
    trees, classes, reps = enumerate_nets()
    assert trees == 384 == len(spanning_trees()) == matrix_tree_count()
    assert classes == 11 == len(reps)
    assert all(len(r) == 6 for r in reps)
    art = polyomino_ascii(set(reps[0]))
    assert art.count("#") == 6
