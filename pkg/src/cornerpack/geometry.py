"""Integral rectangle geometry: overlap arithmetic and directional relations.

All coordinates and extents are integers. A placed rectangle occupies the
half-open box ``[x, x + w) x [y, y + h)``, so rectangles that merely share
an edge or a corner have zero overlap area and all computations are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

UP = "up"
RIGHT = "right"


@dataclass(frozen=True)
class RectDims:
    """Dimensions of an unplaced rectangle, in grid units."""

    width: int
    height: int

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError(f"rectangle sides must be >= 1, got {self.width}x{self.height}")

    @property
    def area(self) -> int:
        return self.width * self.height

    @property
    def perimeter(self) -> int:
        return 2 * (self.width + self.height)

    @property
    def is_square(self) -> bool:
        return self.width == self.height

    def canonical(self) -> tuple[int, int]:
        """Orientation-independent shape key (smaller side first)."""
        return (self.width, self.height) if self.width <= self.height else (self.height, self.width)


@dataclass(frozen=True)
class Container:
    """The rectangular container, with its bottom-left corner at the origin."""

    width: int
    height: int

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError(f"container sides must be >= 1, got {self.width}x{self.height}")

    @property
    def area(self) -> int:
        return self.width * self.height


@dataclass(frozen=True)
class Placement:
    """Position and orientation of one rectangle.

    ``(x, y)`` is the bottom-left corner point of the placed rectangle.
    ``rotated`` means the rectangle stands vertically: its effective width
    is the height of its dimensions and vice versa.
    """

    x: int
    y: int
    rotated: bool = False

    def __post_init__(self) -> None:
        if self.x < 0 or self.y < 0:
            raise ValueError(f"placement coordinates must be >= 0, got ({self.x}, {self.y})")


@dataclass(frozen=True)
class PlacedRect:
    """A rectangle bound to a placement; the unit all geometry operates on."""

    dims: RectDims
    placement: Placement

    @property
    def width(self) -> int:
        """Effective width (sides swapped when rotated)."""
        return self.dims.height if self.placement.rotated else self.dims.width

    @property
    def height(self) -> int:
        """Effective height (sides swapped when rotated)."""
        return self.dims.width if self.placement.rotated else self.dims.height

    @property
    def x(self) -> int:
        return self.placement.x

    @property
    def y(self) -> int:
        return self.placement.y

    @property
    def x2(self) -> int:
        """Right edge (exclusive)."""
        return self.placement.x + self.width

    @property
    def y2(self) -> int:
        """Top edge (exclusive)."""
        return self.placement.y + self.height

    @property
    def area(self) -> int:
        return self.dims.area


@dataclass(frozen=True)
class Instance:
    """A packing problem: a container and the rectangles to place in it."""

    container: Container
    rects: tuple[RectDims, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rects", tuple(self.rects))

    @property
    def n(self) -> int:
        return len(self.rects)

    @property
    def total_rect_area(self) -> int:
        return sum(r.area for r in self.rects)


@dataclass(frozen=True)
class Packing:
    """An assignment of placements to an instance's rectangles.

    ``placements[i]`` pairs with ``instance.rects[i]``. An entry may be
    ``None``, which marks rectangle ``i`` as not (yet) placed; this is how
    partial packings are represented during search and decomposition.
    """

    instance: Instance
    placements: tuple[Placement | None, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "placements", tuple(self.placements))
        if len(self.placements) != self.instance.n:
            raise ValueError(
                f"expected {self.instance.n} placements, got {len(self.placements)}"
            )

    @classmethod
    def empty(cls, instance: Instance) -> "Packing":
        """A packing with every rectangle unplaced."""
        return cls(instance, (None,) * instance.n)

    @property
    def is_complete(self) -> bool:
        return all(pl is not None for pl in self.placements)

    def placed_indices(self) -> list[int]:
        return [i for i, pl in enumerate(self.placements) if pl is not None]

    def unplaced_indices(self) -> list[int]:
        return [i for i, pl in enumerate(self.placements) if pl is None]

    def placed_rect(self, i: int) -> PlacedRect:
        pl = self.placements[i]
        if pl is None:
            raise ValueError(f"rectangle {i} is not placed")
        return PlacedRect(self.instance.rects[i], pl)

    def iter_placed(self) -> Iterator[tuple[int, PlacedRect]]:
        for i, pl in enumerate(self.placements):
            if pl is not None:
                yield i, PlacedRect(self.instance.rects[i], pl)

    def with_placement(self, i: int, placement: Placement | None) -> "Packing":
        """A copy of this packing with rectangle ``i`` (re)placed or removed."""
        updated = list(self.placements)
        updated[i] = placement
        return Packing(self.instance, tuple(updated))


def _interval_overlap(a1: int, a2: int, b1: int, b2: int) -> int:
    """Length of the intersection of half-open intervals [a1,a2) and [b1,b2)."""
    lo = a1 if a1 > b1 else b1
    hi = a2 if a2 < b2 else b2
    return hi - lo if hi > lo else 0


def overlap_area(a: PlacedRect, b: PlacedRect) -> int:
    """Area of the intersection of two placed rectangles.

    Zero when the rectangles only touch along an edge or at a corner.
    Symmetric in its arguments.
    """
    ox = _interval_overlap(a.x, a.x2, b.x, b.x2)
    if ox == 0:
        return 0
    oy = _interval_overlap(a.y, a.y2, b.y, b.y2)
    return ox * oy


def outside_area(r: PlacedRect, c: Container) -> int:
    """Area of ``r`` protruding beyond the container's borders."""
    inside_x = _interval_overlap(r.x, r.x2, 0, c.width)
    inside_y = _interval_overlap(r.y, r.y2, 0, c.height)
    return r.area - inside_x * inside_y


def total_overlap(p: Packing) -> int:
    """Sum of all pairwise overlap areas plus each rectangle's outside area.

    Zero exactly when the placed rectangles form a feasible packing:
    pairwise non-overlapping and none overstepping a container border.
    Unplaced rectangles contribute nothing.
    """
    placed = [rect for _, rect in p.iter_placed()]
    total = 0
    for rect in placed:
        total += outside_area(rect, p.instance.container)
    for i in range(len(placed)):
        for j in range(i + 1, len(placed)):
            total += overlap_area(placed[i], placed[j])
    return total


def is_feasible(p: Packing) -> bool:
    """True when no two placed rectangles overlap and all lie in the container."""
    placed = [rect for _, rect in p.iter_placed()]
    c = p.instance.container
    for rect in placed:
        if rect.x2 > c.width or rect.y2 > c.height:
            return False
    for i in range(len(placed)):
        a = placed[i]
        for j in range(i + 1, len(placed)):
            if overlap_area(a, placed[j]) > 0:
                return False
    return True


def _require_disjoint(a: PlacedRect, b: PlacedRect) -> None:
    if overlap_area(a, b) > 0:
        raise ValueError("directional relations are defined only for non-overlapping rectangles")


def is_over(a: PlacedRect, b: PlacedRect) -> bool:
    """True when ``a`` lies over ``b``.

    ``a`` is over ``b`` when some upward displacement of ``b`` would make
    the two rectangles overlap: their x-intervals intersect with positive
    length and ``a`` starts at or above ``b``'s top edge. The rectangles
    must not overlap.
    """
    _require_disjoint(a, b)
    return a.y >= b.y2 and _interval_overlap(a.x, a.x2, b.x, b.x2) > 0


def is_right_of(a: PlacedRect, b: PlacedRect) -> bool:
    """True when ``a`` lies to the right of ``b``.

    Mirror of :func:`is_over`: positive y-interval intersection and ``a``
    starts at or beyond ``b``'s right edge.
    """
    _require_disjoint(a, b)
    return a.x >= b.x2 and _interval_overlap(a.y, a.y2, b.y, b.y2) > 0


def free_directions(i: int, p: Packing) -> frozenset[str]:
    """The subset of {up, right} in which rectangle ``i`` is unobstructed.

    Contains ``up`` when no other placed rectangle is over ``i`` and
    ``right`` when none is to its right. Container borders are ignored:
    this is freedom relative to the other rectangles only.
    """
    target = p.placed_rect(i)
    up_free = True
    right_free = True
    for j, other in p.iter_placed():
        if j == i:
            continue
        if up_free and is_over(other, target):
            up_free = False
        if right_free and is_right_of(other, target):
            right_free = False
        if not up_free and not right_free:
            break
    free = set()
    if up_free:
        free.add(UP)
    if right_free:
        free.add(RIGHT)
    return frozenset(free)


def l_value(p: Packing) -> int:
    """Sum of all placement coordinates; decreases under down/left moves."""
    return sum(pl.x + pl.y for pl in p.placements if pl is not None)
