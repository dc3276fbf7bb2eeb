"""JSON documents for categories, preorders and ordered semigroups.

Each loader rejects unknown fields and reports the location of the first
problem, either a line/column for malformed JSON or a field path such as
``morphisms[2].dom`` for schema errors.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from archcat.core import FiniteCategory, Morphism
from archcat.semigroup import OrderedSemigroup
from archcat.thin import Preorder

CATEGORY_FIELDS = {"objects", "morphisms", "identities", "composition"}
PREORDER_FIELDS = {"elements", "pairs"}
SEMIGROUP_FIELDS = {"elements", "add", "leq", "zero"}


class FormatError(ValueError):
    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


def parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(e.msg, f"line {e.lineno} column {e.colno}") from None


def _fields(doc: Any, allowed: set[str], required: set[str], what: str) -> None:
    if not isinstance(doc, dict):
        raise FormatError(f"{what} document must be an object", "$")
    unknown = sorted(set(doc) - allowed)
    if unknown:
        raise FormatError(f"unknown field {unknown[0]!r}", unknown[0])
    missing = sorted(required - set(doc))
    if missing:
        raise FormatError(f"missing field {missing[0]!r}", missing[0])


def _names(value: Any, where: str) -> list[str]:
    if not isinstance(value, list):
        raise FormatError("expected a list of names", where)
    for i, v in enumerate(value):
        _name(v, f"{where}[{i}]")
    return list(value)


def _name(value: Any, where: str) -> str:
    if not isinstance(value, str) or not value:
        raise FormatError("expected a non-empty string", where)
    return value


def _tuples(value: Any, width: int, where: str) -> list[tuple[str, ...]]:
    if not isinstance(value, list):
        raise FormatError(f"expected a list of {width}-element lists", where)
    out = []
    for i, row in enumerate(value):
        at = f"{where}[{i}]"
        if not isinstance(row, list) or len(row) != width:
            raise FormatError(f"expected a list of {width} names", at)
        out.append(tuple(_name(v, f"{at}[{j}]") for j, v in enumerate(row)))
    return out


def category_from_dict(doc: Any) -> FiniteCategory:
    _fields(doc, CATEGORY_FIELDS, CATEGORY_FIELDS, "category")
    objects = _names(doc["objects"], "objects")
    morphisms = []
    if not isinstance(doc["morphisms"], list):
        raise FormatError("expected a list", "morphisms")
    for i, m in enumerate(doc["morphisms"]):
        at = f"morphisms[{i}]"
        if not isinstance(m, dict):
            raise FormatError("expected an object", at)
        unknown = sorted(set(m) - {"name", "dom", "cod"})
        if unknown:
            raise FormatError(f"unknown field {unknown[0]!r}", f"{at}.{unknown[0]}")
        for key in ("name", "dom", "cod"):
            if key not in m:
                raise FormatError(f"missing field {key!r}", f"{at}.{key}")
            _name(m[key], f"{at}.{key}")
        morphisms.append(Morphism(m["name"], m["dom"], m["cod"]))
    ids = doc["identities"]
    if not isinstance(ids, dict):
        raise FormatError("expected an object", "identities")
    for k, v in ids.items():
        _name(v, f"identities.{k}")
    composition: dict[tuple[str, str], str] = {}
    for i, (g, f, h) in enumerate(_tuples(doc["composition"], 3, "composition")):
        if (g, f) in composition and composition[(g, f)] != h:
            raise FormatError(f"conflicting entries for {g}∘{f}", f"composition[{i}]")
        composition[(g, f)] = h
    return FiniteCategory(objects, morphisms, ids, composition)


def preorder_from_dict(doc: Any) -> Preorder:
    _fields(doc, PREORDER_FIELDS, PREORDER_FIELDS, "preorder")
    elements = _names(doc["elements"], "elements")
    return Preorder(elements, _tuples(doc["pairs"], 2, "pairs"))


def semigroup_from_dict(doc: Any) -> OrderedSemigroup:
    _fields(doc, SEMIGROUP_FIELDS, SEMIGROUP_FIELDS, "semigroup")
    elements = _names(doc["elements"], "elements")
    add: dict[tuple[str, str], str] = {}
    for i, (x, y, z) in enumerate(_tuples(doc["add"], 3, "add")):
        if (x, y) in add and add[(x, y)] != z:
            raise FormatError(f"conflicting sums for {x} + {y}", f"add[{i}]")
        add[(x, y)] = z
    leq = _tuples(doc["leq"], 2, "leq")
    zero = _name(doc["zero"], "zero")
    return OrderedSemigroup(elements, add, leq, zero)


def detect_kind(doc: Any) -> str:
    """``category``, ``preorder`` or ``semigroup`` judged by the field names."""
    if isinstance(doc, dict):
        keys = set(doc)
        if "objects" in keys:
            return "category"
        if "add" in keys or "zero" in keys or "leq" in keys:
            return "semigroup"
        if "elements" in keys or "pairs" in keys:
            return "preorder"
    raise FormatError("cannot tell category, preorder or semigroup apart", "$")


LOADERS = {
    "category": category_from_dict,
    "preorder": preorder_from_dict,
    "semigroup": semigroup_from_dict,
}


def load(path: str | Path, kind: str | None = None) -> tuple[str, Any, bytes]:
    """Read a document; returns ``(kind, structure, raw bytes)``."""
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise FormatError("not valid UTF-8", f"byte {e.start}") from None
    doc = parse_json(text)
    kind = kind or detect_kind(doc)
    return kind, LOADERS[kind](doc), raw


def dump(structure: FiniteCategory | Preorder | OrderedSemigroup) -> str:
    return json.dumps(structure.to_dict(), indent=2, ensure_ascii=False) + "\n"
