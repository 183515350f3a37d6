"""
Sliding a packing into its bottom-left resting state
====================================================

Every rectangle that can move down or left by a whole number of cells
gets moved, largest slide first down then left, until nothing moves.
The sum of all coordinates strictly drops with each slide, so the
process cannot loop.
"""

from cornerpack import (
    Container,
    Instance,
    Packing,
    Placement,
    RectDims,
    compact,
    is_bottom_left_stable,
    l_value,
)

# Three rectangles floating in a 8x6 container: none touches the floor.
instance = Instance(
    Container(8, 6),
    (RectDims(3, 2), RectDims(2, 3), RectDims(4, 1)),
)
packing = Packing(
    instance,
    (Placement(1, 3), Placement(5, 2), Placement(3, 5)),
)

print("before: l =", l_value(packing), "stable =", is_bottom_left_stable(packing))
for i, r in packing.iter_placed():
    print(f"  rectangle {i + 1} at ({r.x}, {r.y})")

# Compact returns the settled packing plus a step-by-step trace.
settled, trace = compact(packing)

print("\nslides applied:")
for index, direction, distance in trace.steps:
    print(f"  rectangle {index + 1} moved {direction} by {distance}")

print("\nafter: l =", l_value(settled), "stable =", is_bottom_left_stable(settled))
for i, r in settled.iter_placed():
    print(f"  rectangle {i + 1} at ({r.x}, {r.y})")

# Running it again does nothing: the settled state is a fixpoint.
again, second = compact(settled)
assert again == settled and not second.steps
print("\nsecond compaction is a no-op, as expected")
