"""Matplotlib renderings of region sets and probability grids.

The output format follows the file extension (png, pdf, svg, ...).
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Polygon, Rectangle  # noqa: E402

from .distribution import ProbabilityGrid  # noqa: E402
from .regions import RegionSet  # noqa: E402
from .svg import COLORS  # noqa: E402


def _face_axes(ax):
    ax.add_patch(Rectangle((-1, -1), 2, 2, fill=False, lw=1.2, color="black"))
    ax.set_xlim(-1.1, 1.1)
    ax.set_ylim(-1.1, 1.1)
    ax.set_aspect("equal")
    ax.plot([-1, 1], [-1, 1], ls=":", lw=0.6, color="0.6")
    ax.plot([-1, 1], [1, -1], ls=":", lw=0.6, color="0.6")


def plot_regions(rs: RegionSet, path, title: str | None = None):
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    _face_axes(ax)
    for seq, poly in rs.nonempty.items():
        xy = [(p.x, p.y) for p in poly.vertices]
        ax.add_patch(Polygon(xy, closed=True, fc=COLORS[seq], ec=COLORS[seq], alpha=0.5, lw=1))
        cx = sum(x for x, _ in xy) / len(xy)
        cy = sum(y for _, y in xy) / len(xy)
        ax.annotate(seq, (cx, cy), ha="center", va="center", fontsize=8)
    ax.plot([rs.source.x], [rs.source.y], "s", color="black", ms=5)
    if title is None:
        title = f"S = ({rs.source.x:.3g}, {rs.source.y:.3g}),  P(4FSP) = {100 * rs.probability:.2f}%"
    ax.set_title(title, fontsize=9)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_heatmap(grid: ProbabilityGrid, path, levels: int = 20):
    """Grayscale image with labelled contours in percent."""
    fig, ax = plt.subplots(figsize=(5.5, 5))
    pct = 100 * grid.values
    extent = (-1, 1, -1, 1)
    im = ax.imshow(pct, origin="lower", extent=extent, cmap="gray_r", vmin=0, vmax=pct.max() or 1)
    cs = ax.contour(grid.coords, grid.coords, pct, levels=levels, colors="tab:red", linewidths=0.5)
    ax.clabel(cs, fontsize=6, fmt="%.0f")
    ax.plot([0], [0], "+", color="tab:blue")
    ax.set_aspect("equal")
    ax.set_xlabel("s1")
    ax.set_ylabel("s2")
    label = "exact" if grid.pitch is None else f"sampled, h={grid.pitch:g}"
    ax.set_title(f"4FSP probability (%), {grid.n}x{grid.n} sources, {label}", fontsize=9)
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
