"""The JSON facet-file format shared by every command.

    {"n": 3, "facets": [[1, 2, 3], [2, 3, 4]], "name": "two-triangles"}

``n`` is the number of vertices per facet; ``facets`` holds strictly
increasing arrays of positive integers, all of length n; ``name`` is
optional.  Unknown fields are rejected so a file means one thing only.
"""

from __future__ import annotations

import json
from pathlib import Path

from .complexes import Complex, from_facets

__all__ = ["FileFormatError", "complex_from_obj", "complex_to_obj", "load_complex", "save_complex"]

_ALLOWED_KEYS = {"n", "facets", "name"}


class FileFormatError(ValueError):
    """The file does not match the facet-file format."""


def complex_from_obj(obj: object) -> tuple[Complex, str | None]:
    """Parse and validate one facet object; returns (complex, name)."""
    if not isinstance(obj, dict):
        raise FileFormatError("top level must be a JSON object")
    unknown = set(obj) - _ALLOWED_KEYS
    if unknown:
        raise FileFormatError(f"unknown fields: {sorted(unknown)}")
    if "n" not in obj or "facets" not in obj:
        raise FileFormatError('fields "n" and "facets" are required')
    n = obj["n"]
    if type(n) is not int or n < 1:
        raise FileFormatError(f'"n" must be a positive integer, got {n!r}')
    facets = obj["facets"]
    if not isinstance(facets, list) or not facets:
        raise FileFormatError('"facets" must be a nonempty array')
    for facet in facets:
        if not isinstance(facet, list) or len(facet) != n:
            raise FileFormatError(f"every facet must be an array of length {n}: {facet!r}")
        for v in facet:
            if type(v) is not int or v < 1:
                raise FileFormatError(f"vertex ids must be positive integers, got {v!r}")
        if any(a >= b for a, b in zip(facet, facet[1:])):
            raise FileFormatError(f"facet {facet!r} is not strictly increasing")
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise FileFormatError(f'"name" must be a string, got {name!r}')
    return from_facets(facets), name


def complex_to_obj(C: Complex, name: str | None = None) -> dict:
    """The canonical JSON object for a complex: sorted facets, optional name."""
    obj: dict = {"n": C.n, "facets": [list(f) for f in sorted(C.facets)]}
    if name is not None:
        obj["name"] = name
    return obj


def load_complex(path: str | Path) -> tuple[Complex, str | None]:
    """Read a facet file; raises FileFormatError on malformed content."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: not valid JSON ({exc})") from exc
    return complex_from_obj(obj)


def _dumps(obj: dict) -> str:
    # one facet per line keeps files diffable without json.dumps exploding
    # every vertex onto its own line
    parts = [f'  "n": {obj["n"]}']
    facets = ",\n".join(f"    {json.dumps(f)}" for f in obj["facets"])
    parts.append(f'  "facets": [\n{facets}\n  ]')
    if "name" in obj:
        parts.append(f'  "name": {json.dumps(obj["name"])}')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def save_complex(C: Complex, path: str | Path, name: str | None = None) -> None:
    Path(path).write_text(_dumps(complex_to_obj(C, name)), encoding="utf-8")
