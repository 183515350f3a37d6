"""
Rebuilding a packing one corner at a time
=========================================

Any bottom-left-stable packing can be built from the empty container by
repeatedly dropping a rectangle onto a bottom-left corner, in an order
that leaves each newly placed rectangle with nothing above it and
nothing to its right. The order is found backwards: the rectangle freest
toward the top-right leaves last.
"""

import random

from cornerpack import (
    Container,
    compact,
    free_directions,
    guillotine_layout,
    placement_order,
)

# A known-feasible tiling of a 10x8 container into seven pieces.
rng = random.Random(7)
packing = guillotine_layout(Container(10, 8), 7, rng)
packing, _ = compact(packing)  # tilings are already stable; cheap insurance

order = placement_order(packing)
print("build order:", " ".join(str(i + 1) for i in order.order))

# Replay applies the recorded corner actions from the empty container,
# re-validating each one; the final state is the original packing.
states = order.replay()
for step, i in enumerate(order.order, start=1):
    r = states[step].placed_rect(i)
    free = sorted(free_directions(i, states[step]))
    print(
        f"step {step}: rectangle {i + 1} -> ({r.x}, {r.y}), "
        f"free directions afterwards: {', '.join(free)}"
    )

assert states[-1] == packing
print("\nreplay reproduced the packing exactly")
