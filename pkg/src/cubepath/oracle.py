"""Brute-force cross-checks that share nothing with the image tables.

The cube is rolled as a rigid body in space: it starts on the base square
with the source face down, and each roll turns it 90 degrees about the
bottom edge in the direction of travel.  A roll sequence is a path to the
target face exactly when the target face ends up lying on the plane, and
the target point's footprint there is its unfolded image.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .geometry import Point, as_point
from .solver import TIE_TOL, check_interior, solve
from .unfolding import LS, segment_in_strip, strip_of

BOTTOM, TOP, RIGHT, LEFT, BACK, FRONT = "bottom", "top", "right", "left", "back", "front"

# body-frame outward normals; the source face is the bottom, the target the top
FACE_NORMALS = {
    BOTTOM: (0, 0, -1),
    TOP: (0, 0, 1),
    RIGHT: (1, 0, 0),
    LEFT: (-1, 0, 0),
    BACK: (0, 1, 0),
    FRONT: (0, -1, 0),
}

_DIRECTIONS = {"R": (1, 0), "L": (-1, 0), "U": (0, 1), "D": (0, -1)}


def _roll_rotation(d: tuple[int, int]) -> np.ndarray:
    """Quarter turn bringing the face that points along ``d`` down."""
    dx, dy = d
    # axis = z x d, angle +90:  v -> v cos + (k x v) sin + k (k.v)(1 - cos)
    k = np.array([-dy, dx, 0])
    K = np.array([[0, -k[2], k[1]], [k[2], 0, -k[0]], [-k[1], k[0], 0]])
    return (np.eye(3, dtype=int) + K + K @ K).astype(int)


_ROLLS = {m: _roll_rotation(d) for m, d in _DIRECTIONS.items()}


@dataclass(frozen=True)
class CubePose:
    """Orientation (body -> world rotation) and the cell the cube rests on."""

    rotation: tuple[tuple[int, ...], ...]
    cell: tuple[int, int]

    @classmethod
    def start(cls) -> "CubePose":
        return cls(tuple(map(tuple, np.eye(3, dtype=int))), (0, 0))

    def roll(self, move: str) -> "CubePose":
        dx, dy = _DIRECTIONS[move]
        rot = _ROLLS[move] @ np.array(self.rotation)
        return CubePose(tuple(map(tuple, rot)), (self.cell[0] + dx, self.cell[1] + dy))

    def down_face(self) -> str:
        rot = np.array(self.rotation)
        for name, n in FACE_NORMALS.items():
            if tuple(rot @ np.array(n)) == (0, 0, -1):
                return name
        raise AssertionError("no face is down")


def rest_face(seq: str) -> str:
    pose = CubePose.start()
    for m in seq:
        pose = pose.roll(m)
    return pose.down_face()


@lru_cache(maxsize=None)
def _rigid_motion(seq: str) -> tuple[np.ndarray, np.ndarray]:
    """World motion x -> R x + c of the whole roll sequence.

    The cube has edge 2 and starts centred over the origin on z = 0.
    """
    R = np.eye(3)
    c = np.zeros(3)
    cx, cy = 0.0, 0.0
    for m in seq:
        dx, dy = _DIRECTIONS[m]
        pivot = np.array([cx + dx, cy + dy, 0.0])
        Q = _ROLLS[m].astype(float)
        # x -> Q (x - pivot) + pivot
        R = Q @ R
        c = Q @ (c - pivot) + pivot
        cx += 2 * dx
        cy += 2 * dy
    return R, c


def rolled_image(t, seq: str) -> Point:
    """Where the target point (t1, t2) on the top face lands after rolling."""
    t = as_point(t)
    R, c = _rigid_motion(seq)
    w = R @ np.array([t.x, t.y, 2.0]) + c
    if abs(w[2]) > 1e-9:
        raise ValueError(f"target face is not down after {seq!r}")
    return Point(float(w[0]), float(w[1]))


@lru_cache(maxsize=None)
def target_sequences(max_rolls: int = 5) -> tuple[str, ...]:
    """Every roll word of length 1..max_rolls that leaves the target face down."""
    out = []
    for n in range(1, max_rolls + 1):
        for word in itertools.product("RLUD", repeat=n):
            seq = "".join(word)
            if rest_face(seq) == TOP:
                out.append(seq)
    return tuple(out)


@lru_cache(maxsize=None)
def _tables(max_rolls: int):
    seqs = target_sequences(max_rolls)
    motions = [_rigid_motion(q) for q in seqs]
    A = np.array([[m[0][0, 0], m[0][0, 1], m[0][1, 0], m[0][1, 1]] for m in motions])
    b = np.array([[m[0][0, 2] * 2 + m[1][0], m[0][1, 2] * 2 + m[1][1]] for m in motions])
    strips = [strip_of(q) for q in seqs]
    return seqs, A, b, strips


@dataclass(frozen=True)
class OracleResult:
    best_length_sq: float
    best_sequences: tuple[str, ...]
    ls_only: bool

    @property
    def faces(self) -> frozenset[int]:
        return frozenset(len(q) + 1 for q in self.best_sequences)


def brute_force_solve(s, t, max_rolls: int = 5) -> OracleResult:
    """Shortest LS candidate over every roll word reaching the target face.

    Candidates are visited shortest first; each is classified against its
    own strip and pseudopaths are skipped.
    """
    if max_rolls > 5:
        raise ValueError("max_rolls must be at most 5")
    s = check_interior(s, "source")
    t = check_interior(t, "target")
    seqs, A, b, strips = _tables(max_rolls)
    ix = A[:, 0] * t.x + A[:, 1] * t.y + b[:, 0]
    iy = A[:, 2] * t.x + A[:, 3] * t.y + b[:, 1]
    d2 = (ix - s.x) ** 2 + (iy - s.y) ** 2

    best = None
    winners = []
    for i in np.argsort(d2, kind="stable"):
        length_sq = float(d2[i])
        if best is not None and length_sq - best > TIE_TOL:
            break
        cls, _ = segment_in_strip(s, Point(float(ix[i]), float(iy[i])), strips[i])
        if cls != LS:
            continue
        if best is None:
            best = length_sq
        winners.append(seqs[i])
    if best is None:
        raise AssertionError(f"no LS candidate for s={s}, t={t}")
    return OracleResult(best, tuple(winners), True)


def grid_lattice(h: float, interior: bool = True) -> np.ndarray:
    """Lattice coordinates of pitch ``h`` over [-1, 1]; endpoints dropped if ``interior``."""
    n = int(round(2.0 / h))
    if not math.isclose(n * h, 2.0, rel_tol=0, abs_tol=1e-9):
        raise ValueError(f"pitch {h} does not divide the face")
    ks = np.arange(n + 1)
    xs = (2 * ks - n) / n
    return xs[1:-1] if interior else xs


def grid_region_sample(s, h: float):
    """Decide every interior lattice target with :func:`solve`.

    Returns ``(count_4fsp, total, mask)``, the mask being the set of
    lattice targets with a 4-face shortest path.
    """
    if not 0 < h <= 0.1:
        raise ValueError("pitch must be in (0, 0.1]")
    s = check_interior(s, "source")
    xs = grid_lattice(h)
    mask = set()
    total = 0
    for y in xs:
        for x in xs:
            total += 1
            if solve(s, (x, y)).is_4fsp:
                mask.add((float(x), float(y)))
    return len(mask), total, mask
