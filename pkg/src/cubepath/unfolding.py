"""The unfolding grid for paths between opposite faces of a cube.

The source face rests on the base square [-1, 1]^2.  The target face is
seen from above ("top view"), so a target point (t1, t2) is drawn in the
base square too.  Rolling the cube over its edges lays faces down one by
one; after two rolls in a straight line, or three rolls that turn once
and turn back, the target face lies flat on a square of the grid, and the
straight segment from the source to the target's imprint there is a
candidate path.

Roll sequences are plain strings over ``"RLUD"``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .geometry import (
    DEDUP_TOL,
    GEOM_TOL,
    Point,
    angle_deg,
    as_point,
    reflect_axis,
    rotate_about,
)

LS = "LS"
PSEUDO = "PSEUDO"

MOVES = {"R": (1, 0), "L": (-1, 0), "U": (0, 1), "D": (0, -1)}

THREE_FACE = ("RR", "LL", "UU", "DD")
FOUR_FACE = ("RUR", "RDR", "LUL", "LDL", "URU", "ULU", "DRD", "DLD")
CANONICAL = ("RR", "LL", "UU", "DD", "RUR", "RDR", "LUL", "LDL", "URU", "ULU", "DRD", "DLD")


class UnsupportedSequenceError(ValueError):
    pass


# Image of the target point (t1, t2) after each canonical roll sequence.
_IMAGE: dict[str, Callable[[float, float], tuple[float, float]]] = {
    "RR": lambda t1, t2: (4 - t1, t2),
    "RUR": lambda t1, t2: (4 - t2, 2 - t1),
    "RDR": lambda t1, t2: (4 + t2, -2 + t1),
    "LL": lambda t1, t2: (-4 - t1, t2),
    "LUL": lambda t1, t2: (-4 + t2, 2 + t1),
    "LDL": lambda t1, t2: (-4 - t2, -2 - t1),
    "UU": lambda t1, t2: (t1, 4 - t2),
    "URU": lambda t1, t2: (2 - t2, 4 - t1),
    "ULU": lambda t1, t2: (-2 + t2, 4 + t1),
    "DD": lambda t1, t2: (t1, -4 - t2),
    "DRD": lambda t1, t2: (2 + t2, -4 + t1),
    "DLD": lambda t1, t2: (-2 - t2, -4 - t1),
}

# Squared candidate lengths, source (s1, s2), target (x, y).  Kept as an
# independent transcription so that it can be checked against _IMAGE.
# Works elementwise on numpy arrays.
_LENGTH_SQ: dict[str, Callable] = {
    "RR": lambda s1, s2, x, y: (x + s1 - 4) ** 2 + (y - s2) ** 2,
    "LL": lambda s1, s2, x, y: (x + s1 + 4) ** 2 + (y - s2) ** 2,
    "RUR": lambda s1, s2, x, y: (y + s1 - 4) ** 2 + (x + s2 - 2) ** 2,
    "LUL": lambda s1, s2, x, y: (y - s1 - 4) ** 2 + (x - s2 + 2) ** 2,
    "RDR": lambda s1, s2, x, y: (y - s1 + 4) ** 2 + (x - s2 - 2) ** 2,
    "LDL": lambda s1, s2, x, y: (y + s1 + 4) ** 2 + (x + s2 + 2) ** 2,
    "UU": lambda s1, s2, x, y: (x - s1) ** 2 + (y + s2 - 4) ** 2,
    "DD": lambda s1, s2, x, y: (x - s1) ** 2 + (y + s2 + 4) ** 2,
    "URU": lambda s1, s2, x, y: (y + s1 - 2) ** 2 + (x + s2 - 4) ** 2,
    "DRD": lambda s1, s2, x, y: (y - s1 + 2) ** 2 + (x - s2 - 4) ** 2,
    "ULU": lambda s1, s2, x, y: (y - s1 - 2) ** 2 + (x - s2 + 4) ** 2,
    "DLD": lambda s1, s2, x, y: (y + s1 + 2) ** 2 + (x + s2 + 4) ** 2,
}


def _check_canonical(seq: str) -> None:
    if seq not in _IMAGE:
        raise UnsupportedSequenceError(f"not a canonical roll sequence: {seq!r}")


def faces_of(seq: str) -> int:
    return len(seq) + 1


def sibling(seq4: str) -> str:
    """The 3-face sequence a 4-face sequence is a corner move of (RUR -> RR)."""
    _check_canonical(seq4)
    if len(seq4) != 3:
        raise UnsupportedSequenceError(f"{seq4!r} is not a 4-face sequence")
    return seq4[0] * 2


def reflection_line(seq: str) -> tuple[str, float]:
    """Axis and offset of the mirror line taking T to the 3-face image.

    Returns ``("x", 2.0)`` for the line x=2, and so on.
    """
    dx, dy = MOVES[seq[0]]
    return ("x", 2.0 * dx) if dx else ("y", 2.0 * dy)


def pivot_of(seq4: str) -> tuple[Point, int]:
    """Pivot vertex and rotation sign (+90/-90) relating a 4-face image to its sibling."""
    _check_canonical(seq4)
    if len(seq4) != 3:
        raise UnsupportedSequenceError(f"{seq4!r} is not a 4-face sequence")
    dx, dy = MOVES[seq4[0]]
    ex, ey = MOVES[seq4[1]]
    sign = 90 if dx * ey - dy * ex > 0 else -90
    return Point(3 * dx + ex, 3 * dy + ey), sign


def image_of_target(t, seq: str) -> Point:
    _check_canonical(seq)
    t = as_point(t)
    return Point(*_IMAGE[seq](t.x, t.y))


def squared_length(s, t, seq: str) -> float:
    _check_canonical(seq)
    s = as_point(s)
    t = as_point(t)
    return _LENGTH_SQ[seq](s.x, s.y, t.x, t.y)


def squared_lengths_array(s, x: np.ndarray, y: np.ndarray, seqs=CANONICAL) -> np.ndarray:
    """Stack of squared lengths, one layer per sequence, over target arrays."""
    s1, s2 = as_point(s)
    return np.stack([_LENGTH_SQ[q](s1, s2, x, y) for q in seqs])


def image_by_construction(t, seq: str) -> Point:
    """Reflect across the sibling's mirror line, then corner-move if 4-face."""
    _check_canonical(seq)
    axis, c = reflection_line(seq)
    p = reflect_axis(as_point(t), axis, c)
    if len(seq) == 3:
        pivot, sign = pivot_of(seq)
        p = rotate_about(p, pivot, sign)
    return p


# --------------------------------------------------------------------------
# square symmetries

# (a, b, c, d): (x, y) -> (a*x + b*y, c*x + d*y)
SYMMETRIES: tuple[tuple[int, int, int, int], ...] = (
    (1, 0, 0, 1),
    (0, -1, 1, 0),
    (-1, 0, 0, -1),
    (0, 1, -1, 0),
    (1, 0, 0, -1),
    (-1, 0, 0, 1),
    (0, 1, 1, 0),
    (0, -1, -1, 0),
)

_DIR_LETTER = {v: k for k, v in MOVES.items()}


def apply_symmetry(g, p) -> Point:
    a, b, c, d = g
    x, y = p
    return Point(a * x + b * y, c * x + d * y)


def apply_symmetry_seq(g, seq: str) -> str:
    return "".join(_DIR_LETTER[tuple(int(v) for v in apply_symmetry(g, MOVES[m]))] for m in seq)


def inverse_symmetry(g):
    a, b, c, d = g
    # orthogonal: inverse is the transpose
    return (a, c, b, d)


# --------------------------------------------------------------------------
# strips and path classification


@dataclass(frozen=True)
class UnfoldingStrip:
    """Lower-left corners of the 2x2 squares visited, base square first."""

    squares: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.squares)

    def lattice_vertices(self) -> set[tuple[int, int]]:
        out = set()
        for x, y in self.squares:
            out.update({(x, y), (x + 2, y), (x, y + 2), (x + 2, y + 2)})
        return out


def strip_of(seq: str) -> UnfoldingStrip:
    x, y = -1, -1
    squares = [(x, y)]
    for m in seq:
        dx, dy = MOVES[m]
        x += 2 * dx
        y += 2 * dy
        squares.append((x, y))
    return UnfoldingStrip(tuple(squares))


def _slab(p0: float, d: float, lo: float, hi: float) -> tuple[float, float]:
    if d == 0.0:
        return (-math.inf, math.inf) if lo <= p0 <= hi else (math.inf, -math.inf)
    u0 = (lo - p0) / d
    u1 = (hi - p0) / d
    return (u0, u1) if u0 <= u1 else (u1, u0)


def segment_in_strip(s: Point, image: Point, strip: UnfoldingStrip) -> tuple[str, int | None]:
    """Classify the segment from ``s`` to ``image`` against a strip.

    The segment is LS when it runs through the strip's squares one after
    another in order, leaves each square exactly where it enters the next,
    and keeps clear of every lattice vertex.  Returns the classification
    and, for LS segments, the number of squares crossed.
    """
    s = as_point(s)
    image = as_point(image)
    dx = image.x - s.x
    dy = image.y - s.y
    prev_end = 0.0
    for k, (qx, qy) in enumerate(strip.squares):
        ax, bx = _slab(s.x, dx, qx, qx + 2)
        ay, by = _slab(s.y, dy, qy, qy + 2)
        u0 = max(0.0, ax, ay)
        u1 = min(1.0, bx, by)
        if u1 - u0 <= DEDUP_TOL:
            return PSEUDO, None
        if abs(u0 - prev_end) > DEDUP_TOL:
            return PSEUDO, None
        prev_end = u1
    if prev_end < 1.0 - DEDUP_TOL:
        return PSEUDO, None

    L2 = dx * dx + dy * dy
    for vx, vy in strip.lattice_vertices():
        if L2 == 0.0:
            d = math.hypot(vx - s.x, vy - s.y)
        else:
            u = min(1.0, max(0.0, ((vx - s.x) * dx + (vy - s.y) * dy) / L2))
            d = math.hypot(vx - (s.x + u * dx), vy - (s.y + u * dy))
        if d <= GEOM_TOL:
            return PSEUDO, None
    return LS, len(strip.squares)


def classify_path(s, t, seq: str) -> tuple[str, int | None]:
    return segment_in_strip(as_point(s), image_of_target(t, seq), strip_of(seq))


@dataclass(frozen=True)
class PathCandidate:
    source: Point
    target: Point
    sequence: str
    image: Point
    length_sq: float
    classification: str
    faces: int

    @property
    def length(self) -> float:
        return math.sqrt(self.length_sq)

    @property
    def is_ls(self) -> bool:
        return self.classification == LS


def candidate(s, t, seq: str) -> PathCandidate:
    s = as_point(s)
    t = as_point(t)
    img = image_of_target(t, seq)
    cls, _ = segment_in_strip(s, img, strip_of(seq))
    return PathCandidate(s, t, seq, img, squared_length(s, t, seq), cls, faces_of(seq))


# --------------------------------------------------------------------------
# corner moves


def decision_angle(s, pivot, image) -> float:
    """Angle at the pivot between the source and the target image, degrees.

    A corner move about ``pivot`` shortens the path exactly when this
    exceeds 135.
    """
    return angle_deg(as_point(pivot), as_point(s), as_point(image))


def corner_move_image(image, pivot, sign: int) -> Point:
    return rotate_about(as_point(image), as_point(pivot), sign)


def corner_move_sign(s, pivot, image) -> int:
    """Rotation sign that swings the image away from the source ray."""
    s, pivot, image = as_point(s), as_point(pivot), as_point(image)
    c = (s.x - pivot.x) * (image.y - pivot.y) - (s.y - pivot.y) * (image.x - pivot.x)
    return 90 if c > 0 else -90


# --------------------------------------------------------------------------
# nets

# outward normals of the six faces
_FACES = ((0, 0, -1), (0, 0, 1), (1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0))
_FACE_EDGES = tuple(
    (i, j)
    for i, j in itertools.combinations(range(6), 2)
    if _FACES[i] != tuple(-v for v in _FACES[j])
)

# rolling toward +x brings the +x face down, and so on
_ROLL = {
    (1, 0): np.array([[0, 0, 1], [0, 1, 0], [-1, 0, 0]]),
    (-1, 0): np.array([[0, 0, -1], [0, 1, 0], [1, 0, 0]]),
    (0, 1): np.array([[1, 0, 0], [0, 0, 1], [0, -1, 0]]),
    (0, -1): np.array([[1, 0, 0], [0, 0, -1], [0, 1, 0]]),
}


def _is_spanning_tree(edges) -> bool:
    parent = list(range(6))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        parent[ri] = rj
    return len({find(i) for i in range(6)}) == 1


def spanning_trees():
    """All spanning trees of the cube's face-adjacency graph, as edge tuples."""
    return [e for e in itertools.combinations(_FACE_EDGES, 5) if _is_spanning_tree(e)]


def matrix_tree_count() -> int:
    """Spanning-tree count from the Laplacian determinant (Kirchhoff)."""
    lap = np.zeros((6, 6))
    for i, j in _FACE_EDGES:
        lap[i, j] = lap[j, i] = -1
        lap[i, i] += 1
        lap[j, j] += 1
    return int(round(np.linalg.det(lap[1:, 1:])))


def unfold_tree(edges) -> frozenset[tuple[int, int]]:
    """Lay the faces of a spanning tree flat, starting from face 0 on (0, 0)."""
    adj: dict[int, list[int]] = {i: [] for i in range(6)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    cells = {0: (0, 0)}
    stack = [(0, np.eye(3, dtype=int))]
    while stack:
        f, rot = stack.pop()
        for g in adj[f]:
            if g in cells:
                continue
            wx, wy, wz = rot @ np.array(_FACES[g])
            direction = (int(wx), int(wy))
            cx, cy = cells[f]
            cells[g] = (cx + direction[0], cy + direction[1])
            stack.append((g, _ROLL[direction] @ rot))
    return frozenset(cells.values())


_CONGRUENCES = (
    lambda x, y: (x, y),
    lambda x, y: (-y, x),
    lambda x, y: (-x, -y),
    lambda x, y: (y, -x),
    lambda x, y: (x, -y),
    lambda x, y: (-x, y),
    lambda x, y: (y, x),
    lambda x, y: (-y, -x),
)


def canonical_polyomino(cells) -> tuple[tuple[int, int], ...]:
    best = None
    for f in _CONGRUENCES:
        moved = [f(x, y) for x, y in cells]
        mx = min(x for x, _ in moved)
        my = min(y for _, y in moved)
        form = tuple(sorted((x - mx, y - my) for x, y in moved))
        if best is None or form < best:
            best = form
    return best


def enumerate_nets() -> tuple[int, int, list[tuple[tuple[int, int], ...]]]:
    """Count spanning trees, unfold each, and group by planar congruence.

    Returns ``(tree_count, class_count, representatives)``.
    """
    trees = spanning_trees()
    classes = {}
    for tree in trees:
        cells = unfold_tree(tree)
        if len(cells) != 6:
            raise AssertionError(f"overlapping unfolding for tree {tree}")
        classes.setdefault(canonical_polyomino(cells), tree)
    reps = sorted(classes)
    return len(trees), len(reps), reps


def polyomino_ascii(cells) -> str:
    w = max(x for x, _ in cells) + 1
    h = max(y for _, y in cells) + 1
    rows = []
    for y in reversed(range(h)):
        rows.append("".join("#" if (x, y) in cells else "." for x in range(w)))
    return "\n".join(rows)
