"""Strict JSON file formats for instances and solutions.

Instance files describe a container and rectangle list; solution files
carry a feasibility flag and, when feasible, one placement per rectangle
with 1-based indices. Parsing is strict: unknown fields, wrong types and
out-of-range values are rejected with the offending field named. Emission
is canonical (two-space indent, placements sorted by index, trailing
newline) so emit and parse round-trip byte-identically.
"""

from __future__ import annotations

import json

from .geometry import Container, Instance, Packing, Placement, RectDims


class FileFormatError(ValueError):
    """A document failed strict parsing; the message names the field."""


def _object(value, path: str, keys: tuple[str, ...]) -> dict:
    if not isinstance(value, dict):
        raise FileFormatError(f"{path}: expected an object")
    unknown = set(value) - set(keys)
    if unknown:
        raise FileFormatError(f"{path}: unknown field {sorted(unknown)[0]!r}")
    missing = [k for k in keys if k not in value]
    if missing:
        raise FileFormatError(f"{path}: missing field {missing[0]!r}")
    return value


def _int(value, path: str, minimum: int) -> int:
    # bool is an int subclass; a bare true/false is still a type error here.
    if not isinstance(value, int) or isinstance(value, bool):
        raise FileFormatError(f"{path}: expected an integer")
    if value < minimum:
        raise FileFormatError(f"{path}: must be at least {minimum}, got {value}")
    return value


def _bool(value, path: str) -> bool:
    if not isinstance(value, bool):
        raise FileFormatError(f"{path}: expected true or false")
    return value


def _load(text: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FileFormatError(f"invalid JSON: {e}") from e


def parse_instance(text: str) -> Instance:
    doc = _object(_load(text), "document", ("container", "rectangles"))
    cont = _object(doc["container"], "container", ("width", "height"))
    container = Container(
        _int(cont["width"], "container.width", 1),
        _int(cont["height"], "container.height", 1),
    )
    if not isinstance(doc["rectangles"], list):
        raise FileFormatError("rectangles: expected an array")
    rects = []
    for k, entry in enumerate(doc["rectangles"]):
        path = f"rectangles[{k}]"
        obj = _object(entry, path, ("width", "height"))
        rects.append(
            RectDims(_int(obj["width"], f"{path}.width", 1), _int(obj["height"], f"{path}.height", 1))
        )
    return Instance(container, tuple(rects))


def emit_instance(instance: Instance) -> str:
    doc = {
        "container": {
            "width": instance.container.width,
            "height": instance.container.height,
        },
        "rectangles": [{"width": r.width, "height": r.height} for r in instance.rects],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_solution(text: str, instance: Instance) -> Packing | None:
    """Read a solution file against its instance.

    Returns None for an infeasible document (which must omit placements)
    and a Packing otherwise; the packing may be partial. Geometric
    validity is not checked here - callers decide what to do with an
    overlapping or protruding solution.
    """
    raw = _load(text)
    if not isinstance(raw, dict):
        raise FileFormatError("document: expected an object")
    if "placements" in raw:
        doc = _object(raw, "document", ("feasible", "placements"))
    else:
        doc = _object(raw, "document", ("feasible",))
    feasible = _bool(doc["feasible"], "feasible")
    if not feasible:
        if "placements" in doc:
            raise FileFormatError("placements: must be omitted when feasible is false")
        return None
    if "placements" not in doc:
        raise FileFormatError("document: missing field 'placements'")
    if not isinstance(doc["placements"], list):
        raise FileFormatError("placements: expected an array")
    packing = Packing.empty(instance)
    seen = set()
    for k, entry in enumerate(doc["placements"]):
        path = f"placements[{k}]"
        obj = _object(entry, path, ("index", "x", "y", "rotated"))
        index = _int(obj["index"], f"{path}.index", 1)
        if index > instance.n:
            raise FileFormatError(
                f"{path}.index: instance has {instance.n} rectangles, got index {index}"
            )
        if index in seen:
            raise FileFormatError(f"{path}.index: duplicate index {index}")
        seen.add(index)
        placement = Placement(
            _int(obj["x"], f"{path}.x", 0),
            _int(obj["y"], f"{path}.y", 0),
            _bool(obj["rotated"], f"{path}.rotated"),
        )
        packing = packing.with_placement(index - 1, placement)
    return packing


def emit_solution(packing: Packing | None) -> str:
    """Canonical solution document; None means infeasible."""
    if packing is None:
        return json.dumps({"feasible": False}, indent=2) + "\n"
    placements = [
        {"index": i + 1, "x": r.x, "y": r.y, "rotated": packing.placements[i].rotated}
        for i, r in sorted(packing.iter_placed(), key=lambda pair: pair[0])
    ]
    return json.dumps({"feasible": True, "placements": placements}, indent=2) + "\n"
