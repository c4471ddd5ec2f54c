"""ASCII and SVG drawings of two-variable staircases."""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .monideal import MonomialIdeal, Staircase, staircase
from .poly import format_monomial

CELL = 32
MARGIN = 24
SHADE = "#9bb7d4"
BLANK = "#ffffff"


def _as_staircase(J) -> Staircase:
    return J if isinstance(J, Staircase) else staircase(J)


def render_ascii(J: MonomialIdeal | Staircase) -> str:
    """Rows run from the top y-exponent down to 0; ``#`` marks ideal members."""
    st = _as_staircase(J)
    rows = []
    for b in range(st.height - 1, -1, -1):
        rows.append("".join("#" if st.contains(a, b) else "." for a in range(st.width)))
    return "\n".join(rows) + "\n"


def render_svg(J: MonomialIdeal | Staircase, cell: int = CELL) -> str:
    """One ``rect`` per lattice cell in the bounding box; corners get a ``text`` label."""
    st = _as_staircase(J)
    w, h = st.width, st.height
    width, height = 2 * MARGIN + w * cell, 2 * MARGIN + h * cell
    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "width": str(width),
        "height": str(height),
        "viewBox": f"0 0 {width} {height}",
    })
    ET.SubElement(svg, "title").text = "staircase " + ", ".join(
        format_monomial(c) for c in st.corners)
    cells = ET.SubElement(svg, "g", {"id": "cells", "stroke": "#444444", "stroke-width": "1"})
    labels = ET.SubElement(svg, "g", {
        "id": "corners", "font-family": "monospace", "font-size": str(cell // 3),
        "text-anchor": "middle", "dominant-baseline": "central",
    })
    corners = set(st.corners)
    for b in range(h):
        for a in range(w):
            # y grows upward in the lattice, downward in SVG
            px, py = MARGIN + a * cell, MARGIN + (h - 1 - b) * cell
            inside = st.contains(a, b)
            ET.SubElement(cells, "rect", {
                "x": str(px), "y": str(py), "width": str(cell), "height": str(cell),
                "fill": SHADE if inside else BLANK,
                "data-exp": f"{a},{b}",
            })
            if (a, b) in corners:
                ET.SubElement(labels, "text", {
                    "x": str(px + cell // 2), "y": str(py + cell // 2),
                }).text = format_monomial((a, b))
    ET.indent(svg)
    return ET.tostring(svg, encoding="unicode") + "\n"
