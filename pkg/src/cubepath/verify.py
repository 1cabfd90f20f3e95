"""Named verification checks.

Each check returns a :class:`Check`; ``run_suite`` runs a group of them.
Sample sizes default to the full acceptance sizes and are divided by
``scale`` for quick runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .distribution import (
    estimate_probability,
    heatmap,
    lattice_coords,
    max_location,
    on_a_diagonal,
    probability,
    symmetry_defect,
)
from .geometry import BASE_CORNERS, Point
from .oracle import brute_force_solve
from .regions import (
    FEASIBLE_OFF_DIAGONAL,
    FEASIBLE_ON_DIAGONAL,
    diagonal_cases,
    diagonal_exclusion_check,
    halfplane_for,
    region_set,
    to_canonical,
)
from .solver import is_4fsp, solve
from .unfolding import LS, enumerate_nets, matrix_tree_count


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}  {self.detail}".rstrip()


def _n(full: int, scale: int) -> int:
    return max(1, full // scale)


def random_interior(rng: random.Random) -> Point:
    return Point(rng.uniform(-1, 1), rng.uniform(-1, 1))


def random_in_triangle(rng: random.Random) -> Point:
    """Uniform in -1 < s2 <= s1 <= 0."""
    while True:
        a, b = rng.random(), rng.random()
        lo, hi = min(a, b), max(a, b)
        if 0 < hi < 1:
            return Point(-lo, -hi)


def random_diagonal(rng: random.Random) -> Point:
    while True:
        k = rng.uniform(-1, 1)
        if abs(k) > 1e-6:
            return Point(k, k) if rng.random() < 0.5 else Point(k, -k)


def off_diagonal_corners(s: Point) -> set[Point]:
    if s.x * s.y > 0:
        return {Point(1.0, -1.0), Point(-1.0, 1.0)}
    return {Point(1.0, 1.0), Point(-1.0, -1.0)}


def anchored_corners(poly) -> list[Point]:
    return [c for c in BASE_CORNERS if min(v.dist(c) for v in poly.vertices) <= 1e-9]


# --------------------------------------------------------------------------


def oracle_equivalence(n: int = 10_000, rng=None) -> Check:
    rng = rng or random.Random(1)
    worst = 0.0
    for _ in range(n):
        s, t = random_interior(rng), random_interior(rng)
        r = solve(s, t)
        o = brute_force_solve(s, t, max_rolls=5)
        if any(r.candidate(q).classification != LS for q in r.minimizers):
            return Check("oracle equivalence", False, f"pseudopath minimizer at s={s}, t={t}")
        diff = abs(o.best_length_sq - r.length_sq)
        worst = max(worst, diff)
        if diff > 1e-12:
            return Check("oracle equivalence", False, f"|diff|={diff:.3g} at s={s}, t={t}")
        if any(len(q) > 3 for q in o.best_sequences) and o.best_length_sq < r.length_sq - 1e-12:
            return Check("oracle equivalence", False, f"5/6-face path beats canonical at s={s}, t={t}")
    return Check("oracle equivalence", True, f"{n} pairs, max |diff| {worst:.2g}")


def centroid_rule(m: int = 201) -> Check:
    s = Point(0.0, 0.0)
    xs = lattice_coords(m)
    hits = sum(is_4fsp(s, (float(x), float(y))) for y in xs for x in xs)
    area = region_set(s).union_area
    return Check("centroid rule", hits == 0 and area == 0.0, f"{hits} 4FSP targets of {m * m}, union area {area}")


def dudeney() -> Check:
    r = solve((0.0, -5 / 6), (0.0, 5 / 6))
    ok = abs(r.length - 4.0) <= 1e-12 and r.faces == 3 and r.face_set == {3}
    return Check("dudeney on cube", ok, f"length {r.length!r}, faces {r.faces}, minimizers {r.minimizers}")


def witness_4fsp() -> Check:
    r = solve((0.0, -0.9), (0.98, -0.8))
    ok = r.minimizers == ("DRD",) and r.faces == 4 and abs(r.length_sq - 5.9344) <= 1e-9
    return Check("4FSP witness", ok, f"minimizers {r.minimizers}, length^2 {r.length_sq!r}")


def feasible_and_diagonal(n_tri: int = 1000, n_hyp: int = 100, samples: int = 201, rng=None) -> Check:
    rng = rng or random.Random(5)
    for _ in range(n_tri):
        _, s = to_canonical(random_interior(rng))
        live = set(region_set(s).nonempty)
        if not live <= set(FEASIBLE_OFF_DIAGONAL):
            return Check("feasible sequences", False, f"{sorted(live)} at s={s}")
    for _ in range(n_hyp):
        k = -rng.uniform(1e-6, 1.0 - 1e-6)
        s = Point(k, k)
        live = set(region_set(s).nonempty)
        if not live <= set(FEASIBLE_ON_DIAGONAL):
            return Check("feasible sequences", False, f"{sorted(live)} on hypotenuse s={s}")
        if not diagonal_exclusion_check(s, samples):
            return Check("feasible sequences", False, f"diagonal target is a 4FSP endpoint for s={s}")
        for i in range(1, samples + 1):
            x = -1 + 2 * i / (samples + 1)
            if not any(diagonal_cases(k, x)):
                return Check("feasible sequences", False, f"neither case holds at k={k}, x={x}")
    return Check("feasible sequences", True, f"{n_tri} triangle sources, {n_hyp} hypotenuse sources x {samples} targets")


def corner_anchoring(n: int = 1000, n_diag: int = 100, rng=None) -> Check:
    rng = rng or random.Random(6)
    done = 0
    while done < n:
        s = random_interior(rng)
        if abs(abs(s.x) - abs(s.y)) <= 1e-6:
            continue
        done += 1
        live = region_set(s).nonempty
        corners = [anchored_corners(p) for p in live.values()]
        if len(live) != 4 or any(len(c) != 1 for c in corners) or len({c[0] for c in corners}) != 4:
            return Check("corner anchoring", False, f"s={s}: {sorted(live)} anchored at {corners}")
    for _ in range(n_diag):
        s = random_diagonal(rng)
        live = region_set(s).nonempty
        corners = [anchored_corners(p) for p in live.values()]
        if (
            len(live) != 2
            or any(len(c) != 1 for c in corners)
            or {c[0] for c in corners} != off_diagonal_corners(s)
        ):
            return Check("corner anchoring", False, f"diagonal s={s}: {sorted(live)} anchored at {corners}")
    return Check("corner anchoring", True, f"{n} off-diagonal, {n_diag} diagonal sources")


def exact_vs_sampled(n: int = 100, h: float = 0.005, rng=None) -> Check:
    rng = rng or random.Random(7)
    worst = 0.0
    for _ in range(n):
        s = random_interior(rng)
        worst = max(worst, abs(probability(s) - estimate_probability(s, h)))
    return Check("exact vs sampled area", worst <= 0.01, f"{n} sources, h={h}, max |diff| {worst:.4g}")


def halfplane_anchors(n: int = 1000, rng=None) -> Check:
    rng = rng or random.Random(8)
    ulu_pt, dld_pt = Point(-3.0, 1.0), Point(-3.0, -1.0)
    for i in range(n):
        s = random_interior(rng) if i % 2 else random_in_triangle(rng)
        ulu = halfplane_for("ULU", "LL", s)
        dld = halfplane_for("DLD", "LL", s)
        if not (ulu.passes_through(ulu_pt) and dld.passes_through(dld_pt)):
            return Check("half-plane anchors", False, f"anchor missed at s={s}")
        s1, s2 = s
        want_ulu = (s2 + s1) / (s2 - s1 - 2)
        want_dld = (s1 - s2) / (s1 + s2 + 2)
        if abs(ulu.slope() - want_ulu) > 1e-9 or abs(dld.slope() - want_dld) > 1e-9:
            return Check("half-plane anchors", False, f"slope mismatch at s={s}")
        if i % 2 == 0 and (ulu.slope() < -1e-12 or dld.slope() < -1e-12):
            return Check("half-plane anchors", False, f"negative slope in the canonical triangle at s={s}")
    return Check("half-plane anchors", True, f"{n} sources")


def nets() -> Check:
    trees, classes, reps = enumerate_nets()
    kirchhoff = matrix_tree_count()
    ok = trees == 384 and kirchhoff == 384 and classes == 11 and all(len(r) == 6 for r in reps)
    return Check("net enumeration", ok, f"{trees} trees (Kirchhoff {kirchhoff}), {classes} classes")


def heatmap_properties(n: int = 101, out_dir=None, workers: int | None = None) -> Check:
    grid = heatmap(n, workers=workers)
    defect = symmetry_defect(grid)
    center = grid.value_at(0.0, 0.0)
    mx = max_location(grid)
    ok = defect <= 1e-9 and center == 0.0 and not on_a_diagonal(*mx)
    detail = f"{n}x{n}, symmetry defect {defect:.2g}, center {center}, max {grid.values.max():.4f} at {mx}"
    if out_dir is not None:
        from .svg import heatmap_svg

        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        with open(out / "heatmap.csv", "w", newline="") as fh:
            grid.to_csv(fh)
        (out / "heatmap.svg").write_text(heatmap_svg(grid))
        ok = ok and (out / "heatmap.csv").stat().st_size > 0 and (out / "heatmap.svg").stat().st_size > 0
        detail += f", wrote {out}/heatmap.csv and heatmap.svg"
    return Check("heatmap properties", ok, detail)


def diagonal_depression() -> Check:
    lo, hi = probability((-0.9, -0.9)), probability((-0.95, -0.5))
    return Check("diagonal depression", lo < hi, f"P(-0.9,-0.9)={lo:.4f} < P(-0.95,-0.5)={hi:.4f}")


# each entry takes (scale, workers)
SUITES: dict[str, list[Callable[[int, int | None], Check]]] = {
    "solver": [
        lambda k, w: dudeney(),
        lambda k, w: witness_4fsp(),
        lambda k, w: centroid_rule(201 if k == 1 else 51),
    ],
    "oracle": [lambda k, w: oracle_equivalence(_n(10_000, k))],
    "regions": [
        lambda k, w: feasible_and_diagonal(_n(1000, k), _n(100, k)),
        lambda k, w: corner_anchoring(_n(1000, k), _n(100, k)),
        lambda k, w: halfplane_anchors(_n(1000, k)),
    ],
    "distribution": [
        lambda k, w: exact_vs_sampled(_n(100, k)),
        lambda k, w: diagonal_depression(),
        lambda k, w: heatmap_properties(101 if k == 1 else 21, workers=w),
    ],
    "nets": [lambda k, w: nets()],
}


def run_suite(
    name: str = "all", scale: int = 10, workers: int | None = None, echo: Callable[[str], None] | None = print
) -> list[Check]:
    names = list(SUITES) if name == "all" else [name]
    results = []
    for suite in names:
        for fn in SUITES[suite]:
            c = fn(scale, workers)
            results.append(c)
            if echo:
                echo(c.line())
    return results


def all_passed(results) -> bool:
    return all(c.passed for c in results)

