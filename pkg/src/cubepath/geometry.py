"""Planar primitives for the unfolding grid.

Coordinates are in half-edge units, so the base face is the square
[-1, 1] x [-1, 1] and every lattice line sits at an odd integer.
Everything here is a pure function on immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

# geometric predicates vs. algebraic identities
GEOM_TOL = 1e-9
DEDUP_TOL = 1e-12


class DegenerateAngleError(ValueError):
    pass


class Point(NamedTuple):
    x: float
    y: float

    def __sub__(self, other):  # type: ignore[override]
        return Point(self.x - other.x, self.y - other.y)

    def dist2(self, other: "Point") -> float:
        dx = self.x - other.x
        dy = self.y - other.y
        return dx * dx + dy * dy

    def dist(self, other: "Point") -> float:
        return math.sqrt(self.dist2(other))


def as_point(p) -> Point:
    if isinstance(p, Point):
        return p
    x, y = p
    return Point(float(x), float(y))


def rotate_about(p: Point, pivot: Point, sign: int) -> Point:
    """Rotate ``p`` by +90 (counterclockwise) or -90 degrees about ``pivot``."""
    x, y = p
    a, b = pivot
    if sign == 90 or sign == 1:
        return Point(b + a - y, b - a + x)
    if sign == -90 or sign == -1:
        return Point(a - b + y, a + b - x)
    raise ValueError(f"rotation sign must be +90 or -90, got {sign!r}")


def reflect_axis(p: Point, axis: str, c: float) -> Point:
    """Mirror ``p`` across the vertical line x=c (axis='x') or horizontal y=c."""
    if axis == "x":
        return Point(2 * c - p.x, p.y)
    if axis == "y":
        return Point(p.x, 2 * c - p.y)
    raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")


def angle_deg(vertex: Point, a: Point, b: Point) -> float:
    """Interior angle at ``vertex`` between the rays to ``a`` and ``b``, in [0, 180]."""
    ux, uy = a.x - vertex.x, a.y - vertex.y
    vx, vy = b.x - vertex.x, b.y - vertex.y
    nu = math.hypot(ux, uy)
    nv = math.hypot(vx, vy)
    if nu == 0.0 or nv == 0.0:
        raise DegenerateAngleError("angle undefined: a ray endpoint coincides with the vertex")
    # atan2 keeps precision near 0 and 180 where acos does not
    return math.degrees(math.atan2(abs(ux * vy - uy * vx), ux * vx + uy * vy))


def cross(o: Point, a: Point, b: Point) -> float:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


@dataclass(frozen=True)
class HalfPlane:
    """The open half-plane ``alpha*x + beta*y < gamma``.

    When both coefficients vanish the inequality no longer depends on the
    point; it then holds everywhere if ``gamma > 0`` and nowhere otherwise.
    """

    alpha: float
    beta: float
    gamma: float

    @property
    def degenerate(self) -> bool:
        return abs(self.alpha) <= DEDUP_TOL and abs(self.beta) <= DEDUP_TOL

    @property
    def everything(self) -> bool:
        return self.degenerate and self.gamma > 0

    def value(self, p: Point) -> float:
        """Signed slack ``alpha*x + beta*y - gamma`` (negative inside)."""
        return self.alpha * p[0] + self.beta * p[1] - self.gamma

    def contains(self, p: Point, margin: float = 0.0) -> bool:
        if self.degenerate:
            return self.gamma > 0
        norm = math.hypot(self.alpha, self.beta)
        return self.value(p) < -margin * norm

    def slope(self) -> float:
        """Slope of the boundary line; ``inf`` for a vertical boundary."""
        if self.beta == 0.0:
            return math.inf
        return -self.alpha / self.beta

    def passes_through(self, p: Point, tol: float = GEOM_TOL) -> bool:
        norm = math.hypot(self.alpha, self.beta)
        return norm > 0 and abs(self.value(p)) / norm <= tol


@dataclass(frozen=True)
class ConvexPolygon:
    vertices: tuple[Point, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(as_point(v) for v in self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def empty(self) -> bool:
        return len(self.vertices) < 3 or area(self) <= 0.0

    def edges(self):
        vs = self.vertices
        return zip(vs, vs[1:] + vs[:1])

    def halfplanes(self) -> list[HalfPlane]:
        """Edge half-planes whose closed intersection is this polygon (CCW)."""
        out = []
        for p, q in self.edges():
            a = q.y - p.y
            b = p.x - q.x
            out.append(HalfPlane(a, b, a * p.x + b * p.y))
        return out

    def strictly_contains(self, p: Point, margin: float = GEOM_TOL) -> bool:
        if self.empty:
            return False
        p = as_point(p)
        for a, b in self.edges():
            if cross(a, b, p) <= margin * a.dist(b):
                return False
        return True

    def distance_to(self, p: Point) -> float:
        """Euclidean distance from ``p`` to the closed polygon (0 inside)."""
        if self.empty and len(self.vertices) == 0:
            return math.inf
        p = as_point(p)
        if len(self.vertices) >= 3 and all(cross(a, b, p) >= 0 for a, b in self.edges()):
            return 0.0
        return min(_point_segment_distance(p, a, b) for a, b in self.edges())

    def is_convex(self, tol: float = GEOM_TOL) -> bool:
        vs = self.vertices
        n = len(vs)
        if n < 3:
            return True
        return all(cross(vs[i], vs[(i + 1) % n], vs[(i + 2) % n]) >= -tol for i in range(n))


def square(lo_x: float, lo_y: float, size: float = 2.0) -> ConvexPolygon:
    return ConvexPolygon((
        Point(lo_x, lo_y),
        Point(lo_x + size, lo_y),
        Point(lo_x + size, lo_y + size),
        Point(lo_x, lo_y + size),
    ))


BASE_FACE = square(-1.0, -1.0)
BASE_CORNERS = BASE_FACE.vertices


def _point_segment_distance(p: Point, a: Point, b: Point) -> float:
    dx, dy = b.x - a.x, b.y - a.y
    L2 = dx * dx + dy * dy
    if L2 == 0.0:
        return p.dist(a)
    u = ((p.x - a.x) * dx + (p.y - a.y) * dy) / L2
    u = min(1.0, max(0.0, u))
    return math.hypot(p.x - (a.x + u * dx), p.y - (a.y + u * dy))


def _dedup(points: list[Point]) -> list[Point]:
    out: list[Point] = []
    for p in points:
        if not out or p.dist(out[-1]) > DEDUP_TOL:
            out.append(p)
    while len(out) > 1 and out[0].dist(out[-1]) <= DEDUP_TOL:
        out.pop()
    return out


def clip(poly: ConvexPolygon, h: HalfPlane) -> ConvexPolygon:
    """Intersect a convex CCW polygon with the closed half-plane of ``h``.

    A degenerate half-plane keeps the polygon when ``gamma > 0`` and
    empties it otherwise.
    """
    if not poly.vertices:
        return poly
    if h.degenerate:
        return poly if h.gamma > 0 else ConvexPolygon()
    vs = poly.vertices
    vals = [h.value(v) for v in vs]
    if all(v <= 0.0 for v in vals):
        return poly
    if all(v > 0.0 for v in vals):
        return ConvexPolygon()
    out: list[Point] = []
    n = len(vs)
    for i in range(n):
        p, q = vs[i], vs[(i + 1) % n]
        fp, fq = vals[i], vals[(i + 1) % n]
        if fp <= 0.0:
            out.append(p)
        if (fp <= 0.0) != (fq <= 0.0):
            u = fp / (fp - fq)
            out.append(Point(p.x + u * (q.x - p.x), p.y + u * (q.y - p.y)))
    out = _dedup(out)
    if len(out) < 3:
        return ConvexPolygon()
    return ConvexPolygon(tuple(out))


def clip_all(poly: ConvexPolygon, halfplanes: Sequence[HalfPlane]) -> ConvexPolygon:
    for h in halfplanes:
        poly = clip(poly, h)
        if not poly.vertices:
            break
    return poly


def area(poly: ConvexPolygon) -> float:
    vs = poly.vertices
    if len(vs) < 3:
        return 0.0
    s = 0.0
    for (x0, y0), (x1, y1) in zip(vs, vs[1:] + vs[:1]):
        s += x0 * y1 - x1 * y0
    return max(0.0, s / 2.0)


def intersect(a: ConvexPolygon, b: ConvexPolygon) -> ConvexPolygon:
    return clip_all(a, b.halfplanes())
