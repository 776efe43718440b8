"""JSON code files.

A code file looks like::

    {"format": 1, "name": "C2", "q": 2, "generator": [[1,0,0,1,1,1], ...]}

``p``, ``m`` and ``modulus`` are optional; without a modulus the built-in
table is used.  Entries are canonical field encodings in [0, q-1].
"""

from __future__ import annotations

import json
import os
from typing import Any

from lcdhull.code import LinearCode, code_make
from lcdhull.errors import LcdHullError
from lcdhull.gf import FieldSpec, field_make, prime_power

FORMAT_VERSION = 1


class MalformedCodeFile(LcdHullError, ValueError):
    pass


def field_to_dict(F: FieldSpec) -> dict[str, Any]:
    d: dict[str, Any] = {"q": F.q, "p": F.p, "m": F.m}
    if F.modulus is not None:
        d["modulus"] = list(F.modulus)
    return d


def code_to_dict(C: LinearCode, name: str | None = None) -> dict[str, Any]:
    d: dict[str, Any] = {"format": FORMAT_VERSION}
    if name is not None:
        d["name"] = name
    d.update(field_to_dict(C.field))
    d["generator"] = C.G.tolist()
    return d


def code_from_dict(d: dict[str, Any]) -> tuple[LinearCode, str | None]:
    if not isinstance(d, dict):
        raise MalformedCodeFile("code file must hold a JSON object")
    if d.get("format", FORMAT_VERSION) != FORMAT_VERSION:
        raise MalformedCodeFile(f"unsupported format version {d.get('format')!r}")
    try:
        q = int(d["q"])
        rows = d["generator"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedCodeFile(f"missing or invalid field: {exc}") from exc
    pm = prime_power(q)
    if pm is None:
        raise MalformedCodeFile(f"q = {q} is not a prime power")
    p, m = pm
    if int(d.get("p", p)) != p or int(d.get("m", m)) != m:
        raise MalformedCodeFile(f"p, m inconsistent with q = {q}")
    F = field_make(p, m, d.get("modulus"))
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise MalformedCodeFile("generator must be a non-empty list of rows")
    width = len(rows[0])
    if width == 0 or any(len(r) != width for r in rows):
        raise MalformedCodeFile("generator rows must be non-empty and of equal length")
    for r in rows:
        for v in r:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < q:
                raise MalformedCodeFile(f"entry {v!r} is not an encoding in [0, {q - 1}]")
    return code_make(F, rows), d.get("name")


def read_code_file(path: str | os.PathLike) -> tuple[LinearCode, str | None]:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedCodeFile(f"{path}: invalid JSON ({exc})") from exc
    return code_from_dict(data)


def write_code_file(path: str | os.PathLike, C: LinearCode, name: str | None = None) -> None:
    with open(path, "w") as fh:
        json.dump(code_to_dict(C, name), fh)
        fh.write("\n")
