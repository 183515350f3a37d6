"""
Deciding feasibility exactly, with and without pruning
======================================================

The solver's only move is placing a rectangle onto a bottom-left corner,
which is enough to find a packing whenever one exists. The enhanced mode
additionally skips placements that leave the new rectangle under or left
of an existing one; that usually shrinks the search, but not always, and
never changes the verdict.
"""

from cornerpack import (
    Container,
    Instance,
    RectDims,
    SolverConfig,
    SolveStatus,
    oracle_feasible,
    solve,
)


def report(instance, label):
    plain = solve(instance, SolverConfig(enhanced_pruning=False))
    enhanced = solve(instance, SolverConfig(enhanced_pruning=True))
    witness = oracle_feasible(instance)
    agree = (plain.status is SolveStatus.FEASIBLE) == (witness is not None)
    print(f"{label}:")
    print(f"  verdict {plain.status.value}, oracle agrees: {agree}")
    print(f"  nodes expanded: plain {plain.stats.nodes_expanded}, "
          f"enhanced {enhanced.stats.nodes_expanded}")
    if plain.packing is not None:
        for i, r in plain.packing.iter_placed():
            rot = " rotated" if plain.packing.placements[i].rotated else ""
            print(f"  rectangle {i + 1} at ({r.x}, {r.y}){rot}")
    print()


# A perfect split: two tall halves fill the container exactly.
report(Instance(Container(4, 4), (RectDims(2, 4), RectDims(2, 4))), "perfect split")

# Two 2x2 blocks cannot share a 3x3 container; the search proves it.
report(Instance(Container(3, 3), (RectDims(2, 2), RectDims(2, 2))), "provably impossible")

# Here pruning costs three extra nodes: the plain search stumbles into a
# solution inside a subtree the enhanced search refuses to enter.
report(
    Instance(Container(4, 3), (RectDims(2, 1), RectDims(2, 2), RectDims(3, 1), RectDims(2, 1))),
    "pruning is not a free lunch",
)
