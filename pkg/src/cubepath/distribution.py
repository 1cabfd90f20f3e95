"""Probability, per source point, that a uniform target has a 4-face shortest path."""

from __future__ import annotations

import csv
import io
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .geometry import Point
from .oracle import grid_lattice
from .regions import region_set
from .solver import TIE_TOL, check_interior
from .unfolding import CANONICAL, squared_lengths_array

EXACT = "exact"
SAMPLED = "sampled"
DEFAULT_PITCH = 0.01


def probability(s) -> float:
    """Exact value: union area of the 4FSP regions over the face area."""
    s = check_interior(s, "source")
    return region_set(s).probability


def estimate_probability(s, h: float = DEFAULT_PITCH) -> float:
    """Fraction of lattice targets of pitch ``h`` that have a 4-face minimizer.

    The lattice runs over the closed face, endpoints included, and every
    target is judged on the twelve squared lengths alone.  A target whose
    minimizers mix 3- and 4-face sequences counts, except at the four
    face corners.
    """
    if not 0 < h <= 0.1:
        raise ValueError("pitch must be in (0, 0.1]")
    s = check_interior(s, "source")
    xs = grid_lattice(h, interior=False)
    X, Y = np.meshgrid(xs, xs)
    d2 = squared_lengths_array(s, X, Y)
    best = d2.min(axis=0)
    best4 = d2[4:].min(axis=0)
    hit = best4 - best <= TIE_TOL
    # face corners are cube vertices where every sequence ties; never count them
    hit[np.ix_([0, -1], [0, -1])] = False
    return np.count_nonzero(hit) / X.size


def lattice_coords(n: int) -> np.ndarray:
    """n cell centres across (-1, 1); symmetric about 0 by construction."""
    return (2.0 * np.arange(n) + 1.0 - n) / n


@dataclass(frozen=True)
class ProbabilityGrid:
    n: int
    coords: np.ndarray
    values: np.ndarray  # values[j, i] is the source (coords[i], coords[j])
    mode: str
    pitch: float | None = None

    def rows(self):
        """(s1, s2, p) with s2 in the outer loop, matching the CSV order."""
        for j, s2 in enumerate(self.coords):
            for i, s1 in enumerate(self.coords):
                yield float(s1), float(s2), float(self.values[j, i])

    def to_csv(self, fh=None) -> str | None:
        out = fh if fh is not None else io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["s1", "s2", "probability"])
        for s1, s2, p in self.rows():
            w.writerow([f"{s1:.12g}", f"{s2:.12g}", f"{p:.12g}"])
        if fh is None:
            return out.getvalue()
        return None

    def value_at(self, s1: float, s2: float) -> float:
        i = int(np.argmin(np.abs(self.coords - s1)))
        j = int(np.argmin(np.abs(self.coords - s2)))
        return float(self.values[j, i])


def _row_exact(args):
    s2, coords = args
    return [probability(Point(float(s1), float(s2))) for s1 in coords]


def _row_sampled(args):
    s2, coords, h = args
    return [estimate_probability(Point(float(s1), float(s2)), h) for s1 in coords]


def heatmap(n: int = 101, mode: str = EXACT, pitch: float = DEFAULT_PITCH, workers: int | None = None) -> ProbabilityGrid:
    """Evaluate the probability over an n x n lattice of source points.

    Rows are farmed out to ``workers`` processes (1 keeps everything in
    this process); the result does not depend on the worker count.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if mode not in (EXACT, SAMPLED):
        raise ValueError(f"unknown mode {mode!r}")
    coords = lattice_coords(n)
    if mode == EXACT:
        fn, jobs = _row_exact, [(s2, coords) for s2 in coords]
    else:
        fn, jobs = _row_sampled, [(s2, coords, pitch) for s2 in coords]
    workers = workers or os.cpu_count() or 1
    if workers == 1:
        rows = [fn(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(fn, jobs, chunksize=max(1, n // (4 * workers))))
    return ProbabilityGrid(n, coords, np.array(rows), mode, pitch if mode == SAMPLED else None)


def max_location(grid: ProbabilityGrid) -> tuple[float, float]:
    j, i = np.unravel_index(int(np.argmax(grid.values)), grid.values.shape)
    return float(grid.coords[i]), float(grid.coords[j])


def symmetry_defect(grid: ProbabilityGrid) -> float:
    """Largest difference between the grid and any of its 8 square images."""
    v = grid.values
    images = [v, v.T, v[::-1], v[:, ::-1], v[::-1, ::-1], v.T[::-1], v.T[:, ::-1], v.T[::-1, ::-1]]
    return max(float(np.max(np.abs(v - w))) for w in images)


def on_a_diagonal(s1: float, s2: float) -> bool:
    return math.isclose(abs(s1), abs(s2), abs_tol=1e-12)
