"""JSON formats for spaces and maps.

Space: ``{"points": ["a","b"], "min_nbhd": {"a": ["a","b"], "b": ["b"]}}``.
Labels are read as strings.  Emitted neighborhoods list their members in
point order.

Map: ``{"domain": <space or path>, "codomain": <space or path>, "values": {...}}``
where a path is resolved relative to the map file.
"""
from __future__ import annotations

import json
from pathlib import Path

from .errors import MapSpaceMismatch, ValidationError
from .maps import SpaceMap
from .space import FinSpace, format_label


class FormatError(ValidationError):
    fields = ("reason",)


def space_from_obj(obj) -> FinSpace:
    if not isinstance(obj, dict) or "points" not in obj or "min_nbhd" not in obj:
        raise FormatError("space JSON needs 'points' and 'min_nbhd'")
    points = [str(p) for p in obj["points"]]
    nbhd = obj["min_nbhd"]
    if not isinstance(nbhd, dict):
        raise FormatError("'min_nbhd' must be an object")
    return FinSpace.from_sets(points, {str(k): [str(y) for y in v] for k, v in nbhd.items()})


def space_to_obj(space: FinSpace) -> dict:
    return {
        "points": [format_label(p) for p in space.points],
        "min_nbhd": {
            format_label(p): [format_label(q) for q in space.ordered(m)]
            for p, m in zip(space.points, space.nbhd)
        },
    }


def dumps_space(space: FinSpace) -> str:
    return json.dumps(space_to_obj(space))


def parse_json(text: str, where="input"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{where}: {e}") from None


def loads_space(text: str) -> FinSpace:
    return space_from_obj(parse_json(text))


def load_space(path) -> FinSpace:
    return loads_space(Path(path).read_text())


def _space_ref(ref, base: Path) -> FinSpace:
    if isinstance(ref, str):
        return load_space(base / ref)
    return space_from_obj(ref)


def map_from_obj(obj, base=".") -> SpaceMap:
    base = Path(base)
    if not isinstance(obj, dict):
        raise FormatError("map JSON must be an object")
    for key in ("domain", "codomain", "values"):
        if key not in obj:
            raise FormatError(f"map JSON needs '{key}'")
    dom = _space_ref(obj["domain"], base)
    cod = _space_ref(obj["codomain"], base)
    if not isinstance(obj["values"], dict):
        raise MapSpaceMismatch("'values' must be an object")
    values = {str(k): str(v) for k, v in obj["values"].items()}
    return SpaceMap.from_dict(dom, cod, values)


def load_map(path) -> SpaceMap:
    path = Path(path)
    return map_from_obj(parse_json(path.read_text(), str(path)), path.parent)


def map_to_obj(f: SpaceMap, inline: bool = True) -> dict:
    values = {format_label(k): format_label(v) for k, v in f.as_dict().items()}
    if not inline:
        return values
    return {"domain": space_to_obj(f.domain), "codomain": space_to_obj(f.codomain), "values": values}
