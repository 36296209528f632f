"""JSON file formats and report encoding.

Three input documents are recognized by their keys:

* lattice: ``{"rank", "gram", "cone_ref", "name"?}``
* isometry: ``{"lattice", "matrix", "name"?}``
* group: ``{"lattice", "generators", "name"?}``

``"lattice"`` is either an inline lattice object or a name.  A name is
resolved to ``<name>.json`` next to the referencing file first, then among
the bundled fixtures.

Reports never contain floats: rationals are strings like ``"-3/4"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from .algebraic import AlgebraicNumber, refine
from .errors import HyperlatError, ShapeError
from .group import GroupSpec
from .isometry import Isometry, RealVector, new_isometry
from .lattice import Lattice, new_lattice


class FormatError(HyperlatError):
    """Input document is malformed; the message names the offending field."""


def fixtures_dir() -> Path:
    return Path(str(resources.files("hyperlat") / "fixtures"))


@dataclass(frozen=True)
class LatticeDoc:
    lattice: Lattice


@dataclass(frozen=True)
class IsometryDoc:
    isometry: Isometry
    lattice_ref: Any  # name string or inline lattice dict, as written
    name: str | None = None


@dataclass(frozen=True)
class GroupDoc:
    group: GroupSpec
    lattice_ref: Any
    name: str | None = None


# --- parsing --------------------------------------------------------------------------------

def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"{where}: expected an integer, got {json.dumps(value)}")
    return value


def _int_vector(value, where: str) -> list[int]:
    if not isinstance(value, list) or not value:
        raise FormatError(f"{where}: expected a nonempty array of integers")
    return [_int(x, f"{where}[{i}]") for i, x in enumerate(value)]


def _int_matrix(value, where: str) -> list[list[int]]:
    if not isinstance(value, list) or not value:
        raise FormatError(f"{where}: expected a nonempty array of rows")
    rows = [_int_vector(r, f"{where}[{i}]") for i, r in enumerate(value)]
    width = len(rows[0])
    for i, r in enumerate(rows):
        if len(r) != width:
            raise FormatError(f"{where}[{i}]: row has length {len(r)}, expected {width}")
    return rows


def _wrap(where: str, fn, *args):
    try:
        return fn(*args)
    except FormatError:
        raise
    except HyperlatError as exc:
        raise FormatError(f"{where}: {exc}") from exc


def lattice_from_dict(doc: dict, where: str = "$") -> Lattice:
    if not isinstance(doc, dict):
        raise FormatError(f"{where}: expected a lattice object")
    for key in ("rank", "gram", "cone_ref"):
        if key not in doc:
            raise FormatError(f"{where}: missing field {key!r}")
    rank = _int(doc["rank"], f"{where}.rank")
    gram = _int_matrix(doc["gram"], f"{where}.gram")
    if len(gram) != rank or len(gram[0]) != rank:
        raise FormatError(f"{where}.gram: expected {rank}x{rank}, got {len(gram)}x{len(gram[0])}")
    ref = _int_vector(doc["cone_ref"], f"{where}.cone_ref")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise FormatError(f"{where}.name: expected a string")
    return _wrap(where, new_lattice, gram, ref, name)


def _resolve_lattice(ref, base: Path | None, where: str) -> Lattice:
    if isinstance(ref, dict):
        return lattice_from_dict(ref, where)
    if not isinstance(ref, str):
        raise FormatError(f"{where}: expected a lattice name or object")
    candidates = []
    if base is not None:
        candidates.append(base / f"{ref}.json")
    candidates.append(fixtures_dir() / f"{ref}.json")
    for path in candidates:
        if path.is_file():
            doc = _load_json(path)
            if not isinstance(doc, dict) or "gram" not in doc:
                raise FormatError(f"{where}: {path} is not a lattice file")
            return lattice_from_dict(doc, f"{path.name}:$")
    raise FormatError(f"{where}: unknown lattice {ref!r}")


def _load_json(path: Path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def parse_document(doc: dict, base: Path | None = None):
    """Turn a decoded JSON object into a LatticeDoc, IsometryDoc or GroupDoc."""
    if not isinstance(doc, dict):
        raise FormatError("$: expected a JSON object")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise FormatError("$.name: expected a string")
    if "gram" in doc:
        return LatticeDoc(lattice_from_dict(doc))
    if "lattice" not in doc:
        raise FormatError("$: cannot tell the document kind (no 'gram' and no 'lattice')")
    lat = _resolve_lattice(doc["lattice"], base, "$.lattice")
    if "matrix" in doc:
        m = _int_matrix(doc["matrix"], "$.matrix")
        g = _wrap("$.matrix", new_isometry, lat, m)
        return IsometryDoc(g, doc["lattice"], name)
    if "generators" in doc:
        gens_raw = doc["generators"]
        if not isinstance(gens_raw, list) or not gens_raw:
            raise FormatError("$.generators: expected a nonempty array of matrices")
        gens = []
        for i, m in enumerate(gens_raw):
            where = f"$.generators[{i}]"
            gens.append(_wrap(where, new_isometry, lat, _int_matrix(m, where)))
        return GroupDoc(GroupSpec(lat, tuple(gens)), doc["lattice"], name)
    raise FormatError("$: lattice reference without 'matrix' or 'generators'")


def load(path) -> LatticeDoc | IsometryDoc | GroupDoc:
    path = Path(path)
    return parse_document(_load_json(path), path.parent)


# --- serialization ----------------------------------------------------------------------------

def matrix_to_json(m) -> list:
    return [list(row) for row in m]


def lattice_to_dict(lat: Lattice) -> dict:
    out = {"rank": lat.rank, "gram": matrix_to_json(lat.gram), "cone_ref": list(lat.cone_ref)}
    if lat.name is not None:
        out["name"] = lat.name
    return out


def document_to_dict(doc) -> dict:
    if isinstance(doc, LatticeDoc):
        return lattice_to_dict(doc.lattice)
    out: dict = {"lattice": doc.lattice_ref}
    if isinstance(doc, IsometryDoc):
        out["matrix"] = matrix_to_json(doc.isometry.m)
    else:
        out["generators"] = [matrix_to_json(g.m) for g in doc.group.generators]
    if doc.name is not None:
        out["name"] = doc.name
    return out


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def rat(q) -> str:
    q = Fraction(q)
    return str(q)


def interval_json(lo, hi) -> dict:
    return {"lo": rat(lo), "hi": rat(hi)}


def algebraic_json(a: AlgebraicNumber, width) -> dict:
    a = refine(a, width)
    return {"min_poly": list(a.min_poly), "interval": interval_json(a.lo, a.hi)}


def real_vector_json(v: RealVector, width) -> dict:
    k = v.field
    if v.is_rational():
        return {"rational": [rat(x) for x in v.rational_coords()]}
    return {
        "field": algebraic_json(k.alpha, width),
        "coordinates": [[rat(c) for c in x] for x in v.coords],
        "enclosures": [interval_json(*k.enclosure(x, width)) for x in v.coords],
    }


def parse_width(text: str) -> Fraction:
    try:
        w = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ShapeError(f"bad precision {text!r}: expected a positive rational like 1e-12 or 1/1000") from exc
    if w <= 0:
        raise ShapeError(f"bad precision {text!r}: must be positive")
    return w
