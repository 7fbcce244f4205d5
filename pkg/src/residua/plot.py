"""SVG picture of a two-variable monomial ideal: generators, staircase,
compact facets of the Newton polyhedron and closure points."""

from __future__ import annotations

from residua.ideal import MonomialIdeal, contains_monomial, integral_closure
from residua.lattice import DomainError
from residua.polyhedron import build_newton_polyhedron

UNIT = 40
MARGIN = 50


def render_staircase_svg(a: MonomialIdeal, highlight: tuple = ()) -> str:
    """``highlight`` lists exponents drawn with a red ring (essential points)."""
    if a.n != 2:
        raise DomainError("staircase plots need n = 2")
    gens = sorted(a.gens)  # increasing z-exponent, decreasing w-exponent
    closure = integral_closure(a)
    xmax = max(g[0] for g in gens) + 1
    ymax = max(g[1] for g in gens) + 1
    width, height = 2 * MARGIN + xmax * UNIT, 2 * MARGIN + ymax * UNIT

    def X(x):
        return MARGIN + x * UNIT

    def Y(y):
        return height - MARGIN - y * UNIT

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for x in range(xmax + 1):
        out.append(f'<line x1="{X(x)}" y1="{Y(0)}" x2="{X(x)}" y2="{Y(ymax)}" stroke="#eee"/>')
    for y in range(ymax + 1):
        out.append(f'<line x1="{X(0)}" y1="{Y(y)}" x2="{X(xmax)}" y2="{Y(y)}" stroke="#eee"/>')
    out.append(f'<line x1="{X(0)}" y1="{Y(0)}" x2="{X(xmax)}" y2="{Y(0)}" stroke="black"/>')
    out.append(f'<line x1="{X(0)}" y1="{Y(0)}" x2="{X(0)}" y2="{Y(ymax)}" stroke="black"/>')

    corners = [(gens[0][0], ymax)]
    for g, h in zip(gens, gens[1:]):
        corners += [g, (h[0], g[1])]
    corners += [gens[-1], (xmax, gens[-1][1])]
    path = " ".join(f"{X(x)},{Y(y)}" for x, y in corners)
    out.append(f'<polyline points="{path}" fill="none" stroke="#555" stroke-dasharray="4 3"/>')

    np = build_newton_polyhedron(a.gens, 2)
    for f in np.compact_facets:
        on = sorted(np.points[j] for j in f.touching)
        (x1, y1), (x2, y2) = on[0], on[-1]
        out.append(f'<line x1="{X(x1)}" y1="{Y(y1)}" x2="{X(x2)}" y2="{Y(y2)}" '
                   f'stroke="#1f5fbf" stroke-width="2"/>')
        mx, my = (X(x1) + X(x2)) // 2, (Y(y1) + Y(y2)) // 2
        out.append(f'<text x="{mx + 6}" y="{my - 6}" font-family="sans-serif" font-size="13" '
                   f'fill="#1f5fbf">({f.normal[0]},{f.normal[1]})</text>')

    for q in closure.gens:
        if not contains_monomial(a, q):
            out.append(f'<circle cx="{X(q[0])}" cy="{Y(q[1])}" r="5" fill="white" stroke="black"/>')
    for g in gens:
        out.append(f'<circle cx="{X(g[0])}" cy="{Y(g[1])}" r="5" fill="black"/>')
    for q in sorted(set(highlight)):
        out.append(f'<circle cx="{X(q[0])}" cy="{Y(q[1])}" r="9" fill="none" stroke="#d62728" '
                   f'stroke-width="2"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
