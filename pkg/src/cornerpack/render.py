"""SVG rendering of packings.

Geometry uses a bottom-left origin, SVG a top-left one; coordinates are
flipped on the y-axis at emission so drawings read the same way as the
coordinate system. Each placed rectangle becomes one filled rect plus a
centered 1-based index label; the container is an outline behind them.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .geometry import Packing, is_feasible
from .stability import InfeasiblePackingError

SCALE = 20

_PALETTE = (
    "#4e79a7",
    "#f28e2b",
    "#59a14f",
    "#e15759",
    "#b07aa1",
    "#76b7b2",
    "#edc948",
    "#ff9da7",
    "#9c755f",
    "#bab0ac",
)


def render_svg(p: Packing) -> str:
    """Serialize a feasible (possibly partial) packing as an SVG document.

    Raises InfeasiblePackingError on overlap or protrusion: a drawing of
    an infeasible packing would be quietly misleading.
    """
    if not is_feasible(p):
        raise InfeasiblePackingError("refusing to render an infeasible packing")
    c = p.instance.container
    width = c.width * SCALE
    height = c.height * SCALE
    svg = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "width": str(width),
            "height": str(height),
            "viewBox": f"0 0 {width} {height}",
        },
    )
    ET.SubElement(
        svg,
        "rect",
        {
            "x": "0",
            "y": "0",
            "width": str(width),
            "height": str(height),
            "fill": "#ffffff",
            "stroke": "#000000",
            "stroke-width": "2",
        },
    )
    for i, r in p.iter_placed():
        x = r.x * SCALE
        y = (c.height - r.y2) * SCALE
        w = r.width * SCALE
        h = r.height * SCALE
        ET.SubElement(
            svg,
            "rect",
            {
                "x": str(x),
                "y": str(y),
                "width": str(w),
                "height": str(h),
                "fill": _PALETTE[i % len(_PALETTE)],
                "fill-opacity": "0.85",
                "stroke": "#222222",
                "stroke-width": "1",
            },
        )
        label = ET.SubElement(
            svg,
            "text",
            {
                "x": str(x + w // 2),
                "y": str(y + h // 2),
                "text-anchor": "middle",
                "dominant-baseline": "central",
                "font-family": "sans-serif",
                "font-size": "12",
                "fill": "#000000",
            },
        )
        label.text = str(i + 1)
    return ET.tostring(svg, encoding="unicode") + "\n"
