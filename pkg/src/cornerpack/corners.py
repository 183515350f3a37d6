"""Bottom-left corner enumeration and corner-occupying actions.

A bottom-left corner is relative to a concrete shape: it is a position and
orientation at which the shape fits inside the container, overlaps
nothing, and is bottom-left stable the moment it is placed. Placing a
rectangle onto such a corner is the only move the exact solver performs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .geometry import (
    Packing,
    Placement,
    RectDims,
    _interval_overlap,
)


class Border(Enum):
    """Container borders that can support a corner in place of a rectangle."""

    LEFT = "left-border"
    BOTTOM = "bottom-border"


LEFT_BORDER = Border.LEFT
BOTTOM_BORDER = Border.BOTTOM

# A corner support is either the index of a placed rectangle or a border.
Support = int | Border


class StaleCornerError(ValueError):
    """A corner action no longer valid for the current partial packing."""


@dataclass(frozen=True)
class Corner:
    """A bottom-left corner for one shape.

    ``left_support`` and ``bottom_support`` name what blocks the shape
    from sliding: the left/bottom border, or a placed rectangle whose
    right/top edge the shape rests against.
    """

    x: int
    y: int
    rotated: bool
    left_support: Support
    bottom_support: Support

    @property
    def position(self) -> tuple[int, int, bool]:
        return (self.x, self.y, self.rotated)


@dataclass(frozen=True)
class CornerAction:
    """Place rectangle ``rect_index`` onto ``corner``."""

    rect_index: int
    corner: Corner


def _boxes(p: Packing) -> dict[int, tuple[int, int, int, int]]:
    """Placed rectangles as index -> (x1, y1, x2, y2)."""
    return {i: (r.x, r.y, r.x2, r.y2) for i, r in p.iter_placed()}


def _stable_positions(
    boxes: list[tuple[int, int, int, int]], width: int, height: int, ew: int, eh: int
) -> list[tuple[int, int]]:
    """All (x, y) where an ew x eh shape fits, overlaps nothing and is stable.

    Candidate coordinates are the left/bottom borders and the right/top
    edges of placed rectangles: with integral geometry a blocked unit
    slide needs a blocker edge exactly at the shape's own edge, so no
    other position can be stable. Results are sorted by (y, x).
    """
    if ew > width or eh > height:
        return []
    xs = {0}
    ys = {0}
    for x1, y1, x2, y2 in boxes:
        if x2 + ew <= width:
            xs.add(x2)
        if y2 + eh <= height:
            ys.add(y2)
    out = []
    for y in sorted(ys):
        for x in sorted(xs):
            x2_new = x + ew
            y2_new = y + eh
            ok = True
            down_blocked = y == 0
            left_blocked = x == 0
            for bx1, by1, bx2, by2 in boxes:
                if bx1 < x2_new and bx2 > x and by1 < y2_new and by2 > y:
                    ok = False
                    break
                if not down_blocked and by2 == y and bx1 < x2_new and bx2 > x:
                    down_blocked = True
                if not left_blocked and bx2 == x and by1 < y2_new and by2 > y:
                    left_blocked = True
            if ok and down_blocked and left_blocked:
                out.append((x, y))
    return out


def _supports(p: Packing, x: int, y: int, ew: int, eh: int) -> tuple[Support, Support]:
    """Identify one left and one bottom support for a stable position.

    Borders win at coordinate zero; otherwise the lowest-indexed touching
    blocker is reported.
    """
    left: Support | None = LEFT_BORDER if x == 0 else None
    bottom: Support | None = BOTTOM_BORDER if y == 0 else None
    for j, other in p.iter_placed():
        if left is None and other.x2 == x and _interval_overlap(other.y, other.y2, y, y + eh) > 0:
            left = j
        if bottom is None and other.y2 == y and _interval_overlap(other.x, other.x2, x, x + ew) > 0:
            bottom = j
    if left is None or bottom is None:
        raise StaleCornerError(f"position ({x}, {y}) has no support on some side")
    return left, bottom


def enumerate_corners(p: Packing, shape: RectDims) -> list[Corner]:
    """All bottom-left corners of the partial packing ``p`` for ``shape``.

    Both orientations are scanned unless the shape is square, for which
    the rotated placement would duplicate the unrotated one. The result is
    sorted by (y, x, rotated) with duplicates impossible by construction.
    """
    c = p.instance.container
    boxes = list(_boxes(p).values())
    found = []
    orientations = (False,) if shape.is_square else (False, True)
    for rotated in orientations:
        ew = shape.height if rotated else shape.width
        eh = shape.width if rotated else shape.height
        for x, y in _stable_positions(boxes, c.width, c.height, ew, eh):
            left, bottom = _supports(p, x, y, ew, eh)
            found.append(Corner(x, y, rotated, left, bottom))
    found.sort(key=lambda corner: (corner.y, corner.x, corner.rotated))
    return found


def _check_action(p: Packing, a: CornerAction) -> None:
    """Validate that an action still denotes a corner of ``p``."""
    i = a.rect_index
    if i < 0 or i >= p.instance.n:
        raise StaleCornerError(f"rectangle index {i} out of range")
    if p.placements[i] is not None:
        raise StaleCornerError(f"rectangle {i} is already placed")
    corner = a.corner
    shape = p.instance.rects[i]
    ew = shape.height if corner.rotated else shape.width
    eh = shape.width if corner.rotated else shape.height
    c = p.instance.container
    x, y = corner.x, corner.y
    if x + ew > c.width or y + eh > c.height:
        raise StaleCornerError(f"shape does not fit at ({x}, {y})")

    down_blocked = y == 0
    left_blocked = x == 0
    for _, other in p.iter_placed():
        if other.x < x + ew and other.x2 > x and other.y < y + eh and other.y2 > y:
            raise StaleCornerError(f"placement at ({x}, {y}) overlaps rectangle")
        if other.y2 == y and _interval_overlap(other.x, other.x2, x, x + ew) > 0:
            down_blocked = True
        if other.x2 == x and _interval_overlap(other.y, other.y2, y, y + eh) > 0:
            left_blocked = True
    if not (down_blocked and left_blocked):
        raise StaleCornerError(f"placement at ({x}, {y}) is not bottom-left stable")

    for support, is_left in ((corner.left_support, True), (corner.bottom_support, False)):
        if isinstance(support, Border):
            if is_left and (support is not LEFT_BORDER or x != 0):
                raise StaleCornerError("left border named as support away from x = 0")
            if not is_left and (support is not BOTTOM_BORDER or y != 0):
                raise StaleCornerError("bottom border named as support away from y = 0")
            continue
        if p.placements[support] is None:
            raise StaleCornerError(f"support rectangle {support} is not placed")
        other = p.placed_rect(support)
        if is_left:
            touching = other.x2 == x and _interval_overlap(other.y, other.y2, y, y + eh) > 0
        else:
            touching = other.y2 == y and _interval_overlap(other.x, other.x2, x, x + ew) > 0
        if not touching:
            raise StaleCornerError(f"rectangle {support} no longer supports ({x}, {y})")


def apply_action(p: Packing, a: CornerAction) -> Packing:
    """Execute a corner-occupying action on a partial packing.

    The action is re-validated against ``p`` first; a corner computed for
    an earlier state of the search raises :class:`StaleCornerError`
    instead of silently producing a broken packing.
    """
    _check_action(p, a)
    return p.with_placement(a.rect_index, Placement(a.corner.x, a.corner.y, a.corner.rotated))


def supporting_rects(p: Packing, i: int) -> set[int]:
    """Placed rectangles forming the corner that rectangle ``i`` occupies.

    These are the rectangles touching ``i`` along a boundary segment of
    positive length that lie under it or to its left. Borders are not
    reported; a rectangle resting only on borders has no supporters.
    """
    target = p.placed_rect(i)
    supports = set()
    for j, other in p.iter_placed():
        if j == i:
            continue
        under = other.y2 == target.y and _interval_overlap(
            other.x, other.x2, target.x, target.x2
        ) > 0
        left_of = other.x2 == target.x and _interval_overlap(
            other.y, other.y2, target.y, target.y2
        ) > 0
        if under or left_of:
            supports.add(j)
    return supports
