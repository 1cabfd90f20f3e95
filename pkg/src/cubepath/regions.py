"""Exact regions of targets reached by 4-face shortest paths (4FSPs).

For a fixed source, a 4-face candidate beats a 3-face one on an open
half-plane of targets: the quadratic terms of the two squared lengths
cancel.  Intersecting the four half-planes for a 4-face sequence with the
base face gives a convex polygon; the union of the eight polygons is the
set of 4FSP endpoints.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .geometry import (
    BASE_FACE,
    GEOM_TOL,
    ConvexPolygon,
    HalfPlane,
    Point,
    area,
    as_point,
    clip_all,
)
from .unfolding import (
    FOUR_FACE,
    SYMMETRIES,
    THREE_FACE,
    _IMAGE,
    apply_symmetry,
    apply_symmetry_seq,
    inverse_symmetry,
    squared_length,
)

FEASIBLE_OFF_DIAGONAL = ("RUR", "DRD", "DLD", "LUL")
FEASIBLE_ON_DIAGONAL = ("DRD", "LUL")


def _affine(seq: str):
    """Image map of ``seq`` written as t -> A t + b, read off exactly."""
    f = _IMAGE[seq]
    bx, by = f(0, 0)
    ax0, ay0 = f(1, 0)
    ax1, ay1 = f(0, 1)
    return ((ax0 - bx, ax1 - bx), (ay0 - by, ay1 - by)), (bx, by)


_AFFINE = {q: _affine(q) for q in _IMAGE}


def halfplane_for(seq4: str, seq3: str, s) -> HalfPlane:
    """Targets for which ``seq4`` is strictly shorter than ``seq3``.

    With the image written as ``A t + b`` (A orthogonal), the squared length
    is ``|t|^2 - 2 t . A^T(s - b) + |s - b|^2``, so the difference of two of
    them is affine in t.
    """
    s = as_point(s)
    (a4, b4), (a3, b3) = _AFFINE[seq4], _AFFINE[seq3]

    def pull(A, b):
        rx, ry = s.x - b[0], s.y - b[1]
        # A^T (s - b)
        return A[0][0] * rx + A[1][0] * ry, A[0][1] * rx + A[1][1] * ry

    p4 = pull(a4, b4)
    p3 = pull(a3, b3)
    alpha = -2.0 * (p4[0] - p3[0])
    beta = -2.0 * (p4[1] - p3[1])
    # |s-b3|^2 - |s-b4|^2 factored to limit cancellation
    gamma = (b4[0] - b3[0]) * (2 * s.x - b3[0] - b4[0]) + (b4[1] - b3[1]) * (2 * s.y - b3[1] - b4[1])
    return HalfPlane(alpha, beta, gamma)


def region_halfplanes(s, seq4: str) -> list[HalfPlane]:
    return [halfplane_for(seq4, q, s) for q in THREE_FACE]


def region_polygon(s, seq4: str) -> ConvexPolygon:
    return clip_all(BASE_FACE, region_halfplanes(s, seq4))


# --------------------------------------------------------------------------
# canonical triangle


def in_canonical_triangle(s, tol: float = GEOM_TOL) -> bool:
    """``-1 < s2 <= s1 <= 0`` and ``s != (0, 0)``, with slack ``tol``."""
    s1, s2 = as_point(s)
    if abs(s1) <= tol and abs(s2) <= tol:
        return False
    return -1.0 < s2 <= s1 + tol and s1 <= tol


def to_canonical(s):
    """A square symmetry ``g`` and ``g(s)`` lying in the canonical triangle."""
    s = as_point(s)
    for g in SYMMETRIES:
        p = apply_symmetry(g, s)
        if in_canonical_triangle(p):
            return g, p
    raise ValueError(f"{tuple(s)} has no image in the canonical triangle")


def on_diagonal(s, tol: float = GEOM_TOL) -> bool:
    s1, s2 = as_point(s)
    return abs(abs(s1) - abs(s2)) <= tol


def feasible_sequences(s) -> frozenset[str]:
    """4-face sequences that can carry a 4FSP from source ``s``."""
    s = as_point(s)
    if abs(s.x) <= GEOM_TOL and abs(s.y) <= GEOM_TOL:
        return frozenset()
    g, p = to_canonical(s)
    base = FEASIBLE_ON_DIAGONAL if abs(p.x - p.y) <= GEOM_TOL else FEASIBLE_OFF_DIAGONAL
    ginv = inverse_symmetry(g)
    return frozenset(apply_symmetry_seq(ginv, q) for q in base)


# --------------------------------------------------------------------------
# region sets and union area


@dataclass(frozen=True)
class RegionSet:
    source: Point
    polygons: dict[str, ConvexPolygon] = field(hash=False)
    union_area: float

    @property
    def probability(self) -> float:
        return self.union_area / 4.0

    @property
    def nonempty(self) -> dict[str, ConvexPolygon]:
        return {q: p for q, p in self.polygons.items() if not p.empty}

    def contains(self, t, margin: float = GEOM_TOL) -> bool:
        return any(p.strictly_contains(t, margin) for p in self.nonempty.values())

    def distance_to(self, t) -> float:
        polys = list(self.nonempty.values())
        if not polys:
            return float("inf")
        return min(p.distance_to(t) for p in polys)


def union_area(halfplane_sets: list[list[HalfPlane]]) -> float:
    """Area of a union of convex regions ``BASE_FACE ∩ halfplanes`` by inclusion-exclusion."""
    total = 0.0
    n = len(halfplane_sets)
    for k in range(1, n + 1):
        sign = 1.0 if k % 2 else -1.0
        for combo in itertools.combinations(range(n), k):
            hs = [h for i in combo for h in halfplane_sets[i]]
            total += sign * area(clip_all(BASE_FACE, hs))
    return min(4.0, max(0.0, total))


def region_set(s) -> RegionSet:
    """All eight region polygons for source ``s`` and the area of their union.

    Sequences ruled out for this source are still computed; they should come out
    empty, which the tests rely on.
    """
    s = as_point(s)
    hps = {q: region_halfplanes(s, q) for q in FOUR_FACE}
    polys = {q: clip_all(BASE_FACE, hps[q]) for q in FOUR_FACE}
    live = [hps[q] for q in FOUR_FACE if not polys[q].empty]
    return RegionSet(s, polys, union_area(live))


# --------------------------------------------------------------------------
# diagonal sources


def diagonal_cases(k: float, x: float) -> tuple[bool, bool]:
    """The two sufficient inequalities for a diagonal source (k, k) and target (x, x).

    The first says RR beats DRD, the second that LL beats LUL.
    """
    return (k - 1) * (x - 3) < 4, (k + 3) * (x + 1) < 4


def diagonal_exclusion_check(s, samples: int = 201) -> bool:
    """No diagonal target is a 4FSP endpoint from a diagonal source.

    ``s`` must lie on a face diagonal.  It is moved onto the hypotenuse of
    the canonical triangle; along the matching diagonal the better of RR
    and LL must beat every feasible 4-face candidate.
    """
    s = as_point(s)
    if not on_diagonal(s) or (abs(s.x) <= GEOM_TOL and abs(s.y) <= GEOM_TOL):
        raise ValueError(f"{tuple(s)} is not a non-central point on a face diagonal")
    _, p = to_canonical(s)
    feasible = FEASIBLE_ON_DIAGONAL
    for i in range(1, samples + 1):
        x = -1.0 + 2.0 * i / (samples + 1)
        t = Point(x, x)
        three = min(squared_length(p, t, "RR"), squared_length(p, t, "LL"))
        four = min(squared_length(p, t, q) for q in feasible)
        if not three < four:
            return False
    return True
