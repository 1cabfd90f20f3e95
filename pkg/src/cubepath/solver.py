"""Shortest path between a source and a target on opposite cube faces."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import GEOM_TOL, Point, as_point
from .unfolding import CANONICAL, LS, PathCandidate, candidate, squared_length

TIE_TOL = 1e-12


class DomainError(ValueError):
    """Source or target is not strictly inside its face."""


def check_interior(p, name: str = "point", margin: float = GEOM_TOL) -> Point:
    try:
        p = as_point(p)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name} must be a pair of numbers") from exc
    if not all(math.isfinite(c) for c in p):
        raise DomainError(f"{name} {tuple(p)} is not finite")
    if abs(p.x) >= 1.0 - margin or abs(p.y) >= 1.0 - margin:
        raise DomainError(f"{name} {tuple(p)} is not strictly inside the face (-1, 1)^2")
    return p


@dataclass(frozen=True)
class SolveResult:
    length: float
    length_sq: float
    minimizers: tuple[str, ...]
    faces: int
    face_set: frozenset[int]
    candidates: tuple[PathCandidate, ...]

    @property
    def is_4fsp(self) -> bool:
        return 4 in self.face_set

    def candidate(self, seq: str) -> PathCandidate:
        for c in self.candidates:
            if c.sequence == seq:
                return c
        raise KeyError(seq)


def solve(s, t) -> SolveResult:
    """Minimize over the twelve canonical candidates.

    Every sequence whose squared length is within ``TIE_TOL`` of the
    minimum is reported.  Raises :class:`DomainError` unless both points
    are strictly inside the face.
    """
    s = check_interior(s, "source")
    t = check_interior(t, "target")
    cands = tuple(candidate(s, t, q) for q in CANONICAL)
    best = min(c.length_sq for c in cands)
    winners = [c for c in cands if c.length_sq - best <= TIE_TOL]
    for c in winners:
        if c.classification != LS:
            # a pseudopath is always beaten by the corner-moved LS path
            raise AssertionError(f"pseudopath {c.sequence} reached the minimum for s={s}, t={t}")
    face_set = frozenset(c.faces for c in winners)
    return SolveResult(
        length=math.sqrt(best),
        length_sq=best,
        minimizers=tuple(c.sequence for c in winners),
        faces=min(face_set),
        face_set=face_set,
        candidates=cands,
    )


def is_4fsp(s, t) -> bool:
    """True when some shortest path from ``s`` to ``t`` crosses four faces."""
    s = check_interior(s, "source")
    t = check_interior(t, "target")
    lengths = [squared_length(s, t, q) for q in CANONICAL]
    best = min(lengths)
    return min(lengths[4:]) - best <= TIE_TOL
