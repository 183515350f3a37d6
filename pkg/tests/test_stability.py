"""Slide computations, stability predicates, and compaction."""

import random

import pytest

from conftest import make_packing, random_loose_packing
from cornerpack import (
    CompactionTrace,
    InfeasiblePackingError,
    Placement,
    apply_trace,
    compact,
    is_bottom_left_stable,
    is_bottom_left_stable_rect,
    is_feasible,
    l_value,
    max_down_slide,
    max_left_slide,
)


# --- slides ---


def test_down_slide_to_floor():
    p = make_packing(6, 8, (2, 2, 0, 5))
    assert max_down_slide(0, p) == 5


def test_down_slide_onto_blocker():
    p = make_packing(6, 8, (2, 2, 0, 4), (2, 2, 0, 0))
    assert max_down_slide(0, p) == 2


def test_down_slide_zero_on_floor():
    p = make_packing(6, 8, (2, 2, 3, 0))
    assert max_down_slide(0, p) == 0


def test_left_slide_to_border():
    p = make_packing(8, 6, (2, 2, 5, 0))
    assert max_left_slide(0, p) == 5


def test_left_slide_onto_blocker():
    p = make_packing(8, 6, (2, 2, 4, 0), (2, 2, 0, 0))
    assert max_left_slide(0, p) == 2


def test_left_slide_zero_at_border():
    p = make_packing(8, 6, (2, 2, 0, 3))
    assert max_left_slide(0, p) == 0


def test_slides_ignore_non_overlapping_neighbors():
    # Rect 1 misses rect 0's x-interval, so it cannot block the fall, and
    # its y-interval misses too, so it cannot block the slide either.
    p = make_packing(8, 8, (2, 2, 4, 4), (2, 2, 0, 0))
    assert max_down_slide(0, p) == 4
    assert max_left_slide(0, p) == 4
    # After falling, rect 1 is in the slide path.
    fallen = p.with_placement(0, Placement(4, 0))
    assert max_left_slide(0, fallen) == 2


# --- stability predicates ---


def test_stable_at_container_corner():
    p = make_packing(4, 4, (2, 2, 0, 0))
    assert is_bottom_left_stable_rect(0, p)


def test_stable_against_floor_and_neighbor():
    p = make_packing(6, 4, (2, 2, 2, 0), (2, 2, 0, 0))
    assert is_bottom_left_stable_rect(0, p)


def test_floating_rect_is_unstable():
    p = make_packing(4, 4, (1, 1, 1, 1))
    assert not is_bottom_left_stable_rect(0, p)


def test_empty_packing_is_stable():
    p = make_packing(4, 4)
    assert is_bottom_left_stable(p)


def test_stable_four_rect_layout():
    # Staircase: every rectangle rests on the floor or a neighbor's top,
    # and against the left border or a neighbor's right edge.
    p = make_packing(
        8,
        6,
        (3, 2, 0, 0),
        (2, 3, 3, 0),
        (3, 1, 0, 2),
        (2, 2, 5, 0),
    )
    assert is_feasible(p)
    assert is_bottom_left_stable(p)


def test_one_floater_spoils_stability():
    p = make_packing(8, 6, (3, 2, 0, 0), (2, 2, 4, 1))
    assert not is_bottom_left_stable(p)


# --- compaction ---


def test_compact_single_rect_to_origin():
    p = make_packing(6, 6, (2, 2, 3, 2))
    out, trace = compact(p)
    assert out.placements[0] == Placement(0, 0)
    assert trace.total_distance == 5
    assert apply_trace(p, trace) == out


def test_compact_two_rect_fixpoint():
    # Sweep order is by increasing (y, x): the floor rectangle settles
    # first and ends up blocking the other one's column.
    p = make_packing(6, 6, (2, 2, 1, 3), (2, 2, 4, 0))
    out, trace = compact(p)
    assert out.placements[1] == Placement(0, 0)
    assert out.placements[0] == Placement(0, 2)
    assert is_bottom_left_stable(out)
    assert l_value(out) == 2
    assert apply_trace(p, trace) == out


def test_compact_stable_input_is_identity():
    p = make_packing(6, 4, (2, 2, 0, 0), (2, 2, 2, 0))
    out, trace = compact(p)
    assert out == p
    assert trace.steps == ()
    assert trace.initial_l == trace.final_l


def test_compact_rejects_infeasible_input():
    with pytest.raises(InfeasiblePackingError):
        compact(make_packing(4, 4, (2, 2, 0, 0), (2, 2, 1, 1)))
    with pytest.raises(InfeasiblePackingError):
        compact(make_packing(4, 4, (2, 2, 3, 3)))


def test_compact_handles_partial_packings():
    p = make_packing(6, 6, (2, 2, 3, 3), (1, 1, None, None))
    out, _ = compact(p)
    assert out.placements[0] == Placement(0, 0)
    assert out.placements[1] is None


def test_compaction_trace_validates_accounting():
    with pytest.raises(ValueError):
        CompactionTrace(((0, "down", 2),), initial_l=5, final_l=4)
    with pytest.raises(ValueError):
        CompactionTrace((), initial_l=3, final_l=-1)


def test_compact_properties_on_random_packings():
    rng = random.Random(6174)
    for _ in range(1_000):
        p = random_loose_packing(rng, max_side=12, max_n=8)
        out, trace = compact(p)
        assert is_feasible(out)
        assert is_bottom_left_stable(out)
        # L never increases; equality happens exactly for stable input.
        assert l_value(out) <= l_value(p)
        assert (l_value(out) == l_value(p)) == is_bottom_left_stable(p)
        assert trace.total_distance == l_value(p) - l_value(out)
        # Per-rectangle monotonicity and frozen orientations.
        for i in p.placed_indices():
            before = p.placements[i]
            after = out.placements[i]
            assert after.x <= before.x and after.y <= before.y
            assert after.rotated == before.rotated
        # Idempotence and trace replay.
        again, second = compact(out)
        assert again == out
        assert second.steps == ()
        assert apply_trace(p, trace) == out
