"""Plain SVG output in face coordinates.

The viewBox is the base face plus a 5% margin, with y flipped so that
"up" in the unfolding grid is up on screen.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .distribution import ProbabilityGrid
from .regions import RegionSet

MARGIN = 0.1
_VIEWBOX = f"{-1 - MARGIN:g} {-1 - MARGIN:g} {2 + 2 * MARGIN:g} {2 + 2 * MARGIN:g}"

COLORS = {
    "RUR": "#1f77b4",
    "RDR": "#ff7f0e",
    "LUL": "#2ca02c",
    "LDL": "#d62728",
    "URU": "#9467bd",
    "ULU": "#8c564b",
    "DRD": "#e377c2",
    "DLD": "#17becf",
}


def _header(width_px: int) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width_px}" height="{width_px}" viewBox="{_VIEWBOX}">',
    ]


def regions_svg(rs: RegionSet, width_px: int = 480) -> str:
    out = _header(width_px)
    out.append('<g transform="scale(1,-1)">')
    out.append('<rect x="-1" y="-1" width="2" height="2" fill="white" stroke="black" stroke-width="0.01"/>')
    for seq, poly in rs.nonempty.items():
        pts = " ".join(f"{p.x:.9g},{p.y:.9g}" for p in poly.vertices)
        out.append(
            f'<polygon points="{pts}" fill="{COLORS[seq]}" fill-opacity="0.5" '
            f'stroke="{COLORS[seq]}" stroke-width="0.008"><title>{seq}</title></polygon>'
        )
    out.append(f'<circle cx="{rs.source.x:.9g}" cy="{rs.source.y:.9g}" r="0.025" fill="black"/>')
    out.append("</g>")
    # labels outside the flipped group so the text reads upright
    for seq, poly in rs.nonempty.items():
        cx = sum(p.x for p in poly.vertices) / len(poly.vertices)
        cy = sum(p.y for p in poly.vertices) / len(poly.vertices)
        out.append(
            f'<text x="{cx:.6g}" y="{-cy:.6g}" font-size="0.08" text-anchor="middle" '
            f'dominant-baseline="middle">{escape(seq)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def heatmap_svg(grid: ProbabilityGrid, width_px: int = 505) -> str:
    """Grayscale raster: 0 is white, the grid maximum is black."""
    vmax = float(grid.values.max())
    cell = 2.0 / grid.n
    out = _header(width_px)
    out.append('<g transform="scale(1,-1)" shape-rendering="crispEdges">')
    for j, s2 in enumerate(grid.coords):
        for i, s1 in enumerate(grid.coords):
            v = float(grid.values[j, i])
            level = 255 if vmax <= 0 else int(round(255 * (1.0 - v / vmax)))
            out.append(
                f'<rect x="{s1 - cell / 2:.9g}" y="{s2 - cell / 2:.9g}" width="{cell:.9g}" '
                f'height="{cell:.9g}" fill="rgb({level},{level},{level})"/>'
            )
    out.append('<rect x="-1" y="-1" width="2" height="2" fill="none" stroke="black" stroke-width="0.01"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
