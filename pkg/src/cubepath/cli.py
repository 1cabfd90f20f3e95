"""Command-line front end.

Exit codes: 0 success, 1 bad coordinates, 2 usage error, 3 failed verification.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .solver import DomainError, check_interior, solve

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3

_POINT_FLAGS = ("--source", "--target")
_NEG = re.compile(r"^-\.?\d")


def _fix_negative_points(argv: list[str]) -> list[str]:
    """Let ``--source -0.5,0.2`` through argparse by gluing it to its flag."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in _POINT_FLAGS and i + 1 < len(argv) and _NEG.match(argv[i + 1]):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def _point(text: str):
    try:
        x, y = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'x,y', got {text!r}") from None
    return (x, y)


def _g(v: float) -> float:
    return float(f"{v:.12g}")


def _threads(n: int | None) -> int:
    return n or os.cpu_count() or 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cubepath",
        description="Shortest paths between opposite faces of a cube (face = [-1,1]^2, edge 2).",
    )
    sub = p.add_subparsers(dest="verb", required=True, metavar="{solve,regions,heatmap,verify,nets}")

    sp = sub.add_parser("solve", help="shortest path for one source/target pair")
    sp.add_argument("--source", type=_point, required=True, metavar="S1,S2")
    sp.add_argument("--target", type=_point, required=True, metavar="T1,T2")
    sp.add_argument("--json", action="store_true", help="JSON on stdout")
    sp.add_argument("--edge-length", type=float, default=2.0, metavar="L", help="report lengths for a cube of edge L")

    rp = sub.add_parser("regions", help="4FSP endpoint regions for one source")
    rp.add_argument("--source", type=_point, required=True, metavar="S1,S2")
    rp.add_argument("--svg", metavar="PATH", help="write an SVG of the base face and regions")
    rp.add_argument("--json", metavar="PATH", help="write the polygons as JSON")
    rp.add_argument("--figure", metavar="PATH", help="matplotlib rendering (format from extension)")

    hp = sub.add_parser("heatmap", help="4FSP probability over a lattice of sources")
    hp.add_argument("--n", type=int, default=101, help="sources per axis (default 101)")
    hp.add_argument("--sampled", action="store_true", help="estimate on a target lattice instead of exact areas")
    hp.add_argument("--pitch", type=float, default=0.01, help="target lattice pitch for --sampled")
    hp.add_argument("--csv", metavar="PATH", help="CSV output (default: stdout)")
    hp.add_argument("--svg", metavar="PATH", help="grayscale SVG raster")
    hp.add_argument("--figure", metavar="PATH", help="matplotlib contour figure")
    hp.add_argument("--threads", type=int, default=None)

    vp = sub.add_parser("verify", help="run the verification suites")
    vp.add_argument("--suite", default="all", choices=["all", "solver", "oracle", "regions", "distribution", "nets"])
    vp.add_argument("--full", action="store_true", help="acceptance-size samples (slower)")
    vp.add_argument("--threads", type=int, default=None)

    sub.add_parser("nets", help="count cube nets")
    return p


def cmd_solve(args) -> int:
    r = solve(args.source, args.target)
    k = args.edge_length / 2.0
    if args.json:
        doc = {
            "length": _g(r.length * k),
            "faces": r.faces,
            "minimizers": list(r.minimizers),
            "candidates": [
                {"seq": c.sequence, "length_sq": _g(c.length_sq * k * k), "class": c.classification, "faces": c.faces}
                for c in r.candidates
            ],
        }
        print(json.dumps(doc))
        return EXIT_OK
    print(f"length   {_g(r.length * k)}")
    print(f"faces    {r.faces}")
    print(f"shortest {' '.join(r.minimizers)}")
    for c in sorted(r.candidates, key=lambda c: c.length_sq):
        print(f"  {c.sequence:<4} {_g(c.length_sq * k * k):>14}  {c.classification}")
    return EXIT_OK


def cmd_regions(args) -> int:
    from .geometry import area
    from .regions import region_set

    s = check_interior(args.source, "source")
    rs = region_set(s)
    print("seq,vertices,area")
    for seq, poly in rs.polygons.items():
        print(f"{seq},{len(poly.vertices)},{_g(area(poly))}")
    print(f"# union_area {_g(rs.union_area)}  probability {_g(rs.probability)}")
    if args.svg:
        from .svg import regions_svg

        with open(args.svg, "w") as fh:
            fh.write(regions_svg(rs))
    if args.json:
        doc = {
            "source": [_g(s.x), _g(s.y)],
            "union_area": _g(rs.union_area),
            "probability": _g(rs.probability),
            "polygons": {q: [[_g(v.x), _g(v.y)] for v in p.vertices] for q, p in rs.nonempty.items()},
        }
        with open(args.json, "w") as fh:
            json.dump(doc, fh, indent=1)
    if args.figure:
        from .plotting import plot_regions

        plot_regions(rs, args.figure)
    return EXIT_OK


def cmd_heatmap(args) -> int:
    from .distribution import EXACT, SAMPLED, heatmap

    if args.n < 3:
        raise DomainError("--n must be at least 3")
    if args.sampled and not 0 < args.pitch <= 0.1:
        raise DomainError("--pitch must be in (0, 0.1]")
    grid = heatmap(args.n, SAMPLED if args.sampled else EXACT, args.pitch, workers=_threads(args.threads))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            grid.to_csv(fh)
    else:
        grid.to_csv(sys.stdout)
    if args.svg:
        from .svg import heatmap_svg

        with open(args.svg, "w") as fh:
            fh.write(heatmap_svg(grid))
    if args.figure:
        from .plotting import plot_heatmap

        plot_heatmap(grid, args.figure)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import all_passed, run_suite

    results = run_suite(args.suite, scale=1 if args.full else 10, workers=_threads(args.threads))
    ok = all_passed(results)
    print(f"{sum(c.passed for c in results)}/{len(results)} checks passed")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_nets(args) -> int:
    from .unfolding import enumerate_nets, polyomino_ascii

    trees, classes, reps = enumerate_nets()
    print(f"tree_count {trees}")
    print(f"class_count {classes}")
    for i, rep in enumerate(reps, 1):
        print(f"\n# net {i}")
        print(polyomino_ascii(set(rep)))
    return EXIT_OK


COMMANDS = {"solve": cmd_solve, "regions": cmd_regions, "heatmap": cmd_heatmap, "verify": cmd_verify, "nets": cmd_nets}


def run(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_fix_negative_points(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.verb](args)
    except DomainError as exc:
        print(f"cubepath: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
