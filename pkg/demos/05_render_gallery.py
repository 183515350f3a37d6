"""
Drawing packings as SVG
=======================

The renderer flips the y axis so drawings sit on the floor the way the
coordinates do, fills each rectangle from a small palette, and labels it
with its 1-based index. This script writes a few drawings next to
itself.
"""

import pathlib
import random

from cornerpack import Container, SolverConfig, compact, guillotine_layout, render_svg, solve

out_dir = pathlib.Path(__file__).resolve().parent / "gallery"
out_dir.mkdir(exist_ok=True)

rng = random.Random(2718)
written = []

# A few random tilings of differently shaped containers.
for k, (w, h, n) in enumerate([(12, 8, 9), (6, 14, 7), (10, 10, 12)], start=1):
    packing = guillotine_layout(Container(w, h), n, rng)
    path = out_dir / f"tiling_{k}_{w}x{h}.svg"
    path.write_text(render_svg(packing), encoding="utf-8")
    written.append(path)

# A solved instance: generate, forget the layout, let the solver refind
# one, then draw what it found (compacted, so it hugs the corner).
layout = guillotine_layout(Container(9, 7), 6, rng)
result = solve(layout.instance, SolverConfig())
solved, _ = compact(result.packing)
path = out_dir / "solved_9x7.svg"
path.write_text(render_svg(solved), encoding="utf-8")
written.append(path)

for path in written:
    print("wrote", path.relative_to(out_dir.parent))
