#!/usr/bin/env python3
"""
SVG picture of the alcove geometry of a rank-2 root datum.

V = Y (x) R is drawn in the coordinates of Y = Z^2, clipped to the window
[-bound, bound]^2. Regions are clipped exactly with Fractions and only rounded
to integer pixels when written out.
"""

from fractions import Fraction
from math import ceil, floor
from typing import TYPE_CHECKING, List, Optional, Sequence, Tuple
from xml.sax.saxutils import escape

from .errors import NotRank2, UsageError
from .smith import pair
from .weyl_ext import ExtAffineElement

if TYPE_CHECKING:
    from .context import WeylContext

Point = Tuple[Fraction, Fraction]
Constraint = Tuple[Tuple[int, ...], Fraction, int]    # sign * (<covector, v> - level) >= 0

SCALE = 60
MARGIN = 20
LEGEND_HEIGHT = 70

SVG_TEMPLATE = """<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">
  <title>Alcoves of {datum}</title>
  <rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>
  <g id="regions">
{regions}
  </g>
  <g id="hyperplanes" stroke="#555555" stroke-width="1">
{hyperplanes}
  </g>
  <g id="highlights">
{highlights}
  </g>
  <g id="legend" font-family="Arial, sans-serif" font-size="12" fill="#333333">
{legend}
  </g>
</svg>
"""

REGION_STYLES = [
    ("chamber", "dominant chamber", "#e7f3ff"),
    ("pi-box", "box Pi_sigma", "#fff8dc"),
    ("fundamental", "fundamental alcove", "#9fd69f"),
]


def _window(bound: int) -> List[Point]:
    b = Fraction(bound)
    return [(-b, -b), (b, -b), (b, b), (-b, b)]


def _crossing(p: Point, q: Point, fp: Fraction, fq: Fraction) -> Point:
    t = fp / (fp - fq)
    return (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))


def clip_polygon(polygon: List[Point], constraint: Constraint) -> List[Point]:
    """Sutherland-Hodgman step against one closed half-plane"""
    covector, level, sign = constraint
    values = [sign * (pair(covector, p) - level) for p in polygon]
    result = []
    for k, current in enumerate(polygon):
        previous, f_prev, f_curr = polygon[k - 1], values[k - 1], values[k]
        if f_curr >= 0:
            if f_prev < 0:
                result.append(_crossing(previous, current, f_prev, f_curr))
            result.append(current)
        elif f_prev >= 0:
            result.append(_crossing(previous, current, f_prev, f_curr))
    return result


def clip_region(bound: int, constraints: Sequence[Constraint]) -> List[Point]:
    polygon = _window(bound)
    for constraint in constraints:
        polygon = clip_polygon(polygon, constraint)
        if not polygon:
            break
    return polygon


def hyperplane_segment(covector: Sequence[int], level: int, bound: int) -> Optional[Tuple[Point, Point]]:
    """Part of <covector, v> = level inside the window, if it is a segment"""
    window = _window(bound)
    points = set()
    for k in range(4):
        p, q = window[k], window[(k + 1) % 4]
        fp, fq = pair(covector, p) - level, pair(covector, q) - level
        if fp == 0:
            points.add(p)
        if (fp < 0 < fq) or (fq < 0 < fp):
            points.add(_crossing(p, q, fp, fq))
    ordered = sorted(points)
    if len(ordered) < 2:
        return None
    return ordered[0], ordered[-1]


def _pixel(p: Sequence[Fraction], bound: int) -> Tuple[int, int]:
    return round((p[0] + bound) * SCALE) + MARGIN, round((bound - p[1]) * SCALE) + MARGIN


def _polygon_svg(polygon: List[Point], bound: int, css_id: str, fill: str) -> str:
    points = " ".join("{},{}".format(*_pixel(p, bound)) for p in polygon)
    return f'    <polygon id="{css_id}" points="{points}" fill="{fill}" stroke="none"/>'


def plot_alcoves(ctx: "WeylContext", bound: int = 2, highlight: Sequence[ExtAffineElement] = ()) -> str:
    """
    Draw the hyperplanes H_{beta,n} meeting the window, shade the dominant
    chamber, the box Pi_sigma and the fundamental alcove, and mark the alcove
    w^-1(A_fund) of every highlighted element.

    Args:
        ctx: Context of a rank-2 datum
        bound: Half-width of the window in Y coordinates
        highlight: Elements whose alcoves w^-1(A_fund) are marked

    Returns:
        SVG 1.1 document as text
    """
    datum = ctx.datum
    if datum.rank != 2:
        raise NotRank2(f"plot-alcoves needs a rank-2 datum, {datum.name} has rank {datum.rank}")
    if bound < 1:
        raise UsageError(f"Plot bound must be positive, got {bound}")

    sigma = datum.sigma
    regions = {
        "chamber": [(beta, Fraction(0), 1) for beta in datum.positive_roots],
        "pi-box": [c for alpha in datum.simple_roots for c in (
            (alpha, Fraction(pair(alpha, sigma) - 1), 1), (alpha, Fraction(pair(alpha, sigma)), -1))],
        "fundamental": [c for beta in datum.positive_roots for c in (
            (beta, Fraction(0), 1), (beta, Fraction(1), -1))],
    }
    region_lines = []
    for css_id, _, fill in REGION_STYLES:
        polygon = clip_region(bound, regions[css_id])
        if len(polygon) >= 3:
            region_lines.append(_polygon_svg(polygon, bound, css_id, fill))

    hyperplane_lines = []
    corners = _window(bound)
    for beta in datum.positive_roots:
        values = [pair(beta, c) for c in corners]
        for level in range(ceil(min(values)), floor(max(values)) + 1):
            segment = hyperplane_segment(beta, level, bound)
            if segment is None:
                continue
            (x1, y1), (x2, y2) = _pixel(segment[0], bound), _pixel(segment[1], bound)
            width = ' stroke-width="2"' if level == 0 else ""
            hyperplane_lines.append(f'    <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"{width}/>')

    highlight_lines = []
    for w in highlight:
        point = ctx.alcoves.inverse_alcove_point(w)
        # the alcove containing the point: n < <beta, v> < n + 1 for every positive beta
        constraints = [c for beta in datum.positive_roots for c in (
            (beta, Fraction(floor(pair(beta, point))), 1), (beta, Fraction(floor(pair(beta, point)) + 1), -1))]
        polygon = clip_region(bound, constraints)
        if len(polygon) >= 3:
            highlight_lines.append(_polygon_svg(polygon, bound, "highlight", "#f4a6a6"))
        x, y = _pixel(point, bound)
        literal = escape(ctx.group.element_literal(w))
        highlight_lines.append(f'    <circle cx="{x}" cy="{y}" r="3" fill="#dc3545"/>')
        highlight_lines.append(
            f'    <text x="{x + 5}" y="{y - 5}" font-family="Arial, sans-serif" font-size="11">{literal}</text>')

    side = 2 * bound * SCALE + 2 * MARGIN
    legend_lines = [f'    <text x="{MARGIN}" y="{side + 15}">{escape(datum.name)}, window [-{bound}, {bound}]^2</text>']
    for k, (_, name, fill) in enumerate(REGION_STYLES):
        x = MARGIN + k * 150
        legend_lines.append(f'    <rect x="{x}" y="{side + 30}" width="12" height="12" fill="{fill}" stroke="#333333"/>')
        legend_lines.append(f'    <text x="{x + 18}" y="{side + 41}">{name}</text>')

    return SVG_TEMPLATE.format(
        width=max(side, MARGIN + 150 * len(REGION_STYLES)),
        height=side + LEGEND_HEIGHT,
        datum=escape(datum.name),
        regions="\n".join(region_lines),
        hyperplanes="\n".join(hyperplane_lines),
        highlights="\n".join(highlight_lines),
        legend="\n".join(legend_lines),
    )
