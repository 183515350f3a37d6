"""
Why the corner method stops working in three dimensions
=======================================================

In 2D, every feasible packing has a rectangle with nothing above it and
nothing to its right, which is what lets packings be rebuilt corner by
corner. Four boxes in a 3x2x3 container show that no such guarantee
exists in 3D: each box is blocked along some positive axis, cyclically.
"""

from cornerpack import (
    Container,
    blocked_directions3,
    compact,
    find_escaper,
    find_escaper3,
    free_directions,
    guillotine_layout,
    is_feasible3,
    table1_packing,
)

import random

# First the 2D guarantee at work: any feasible packing has an escaper.
rng = random.Random(11)
flat = guillotine_layout(Container(9, 6), 5, rng)
flat, _ = compact(flat)
chain = find_escaper(flat)
print("2D: rectangle", chain.escaper + 1, "is free toward",
      " and ".join(sorted(free_directions(chain.escaper, flat))))

# Now the 3D configuration. Feasible, yet every box is stuck.
p = table1_packing()
c = p.container
print(f"\n3D container {c.width}x{c.depth}x{c.height}, feasible: {is_feasible3(p)}")
for i, box in enumerate(p.boxes):
    blocked = blocked_directions3(i, p)
    print(f"  box {i + 1} at ({box.x}, {box.y}, {box.z}) "
          f"size {box.dims.width}x{box.dims.depth}x{box.dims.height}: "
          f"blocked in {sorted(blocked)}")

print("escaping box:", find_escaper3(p))

# The blocking is cyclic: box 1 pins 4, 2 pins 1, 3 pins 2, 4 pins 3,
# and box 2 additionally pins 4 sideways. Removing box 1 therefore
# leaves the remaining three still mutually stuck.
remaining = type(p)(p.container, p.boxes[1:])
print("after removing box 1, escaping box:", find_escaper3(remaining))
