"""JSON reading and writing for covers, graphs and automorphism files."""
from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any

from .cover import InvalidCover, MonodromyCover, validate
from .graphcover import CoverGraph, GraphError, graph
from .lifting import CutPresentation
from .presentation import Automorphism, WordError, automorphism_from_strings

FORMAT = 1


class InputError(ValueError):
    """Malformed input file; the message names the file position or field."""


def dumps(obj: Any, indent: int = 2) -> str:
    """JSON with lists of scalars kept on one line."""

    def enc(o, level):
        pad = " " * (indent * level)
        inner = " " * (indent * (level + 1))
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [f"{inner}{json.dumps(str(k))}: {enc(v, level + 1)}" for k, v in o.items()]
            return "{\n" + ",\n".join(items) + "\n" + pad + "}"
        if isinstance(o, (list, tuple)):
            if all(not isinstance(x, (dict, list, tuple)) for x in o):
                return "[" + ", ".join(json.dumps(x) for x in o) + "]"
            if all(isinstance(x, (list, tuple)) and all(not isinstance(y, (dict, list, tuple)) for y in x)
                   for x in o) and sum(len(x) for x in o) <= 40:
                return "[" + ", ".join(enc(x, level + 1) for x in o) + "]"
            return "[\n" + ",\n".join(inner + enc(x, level + 1) for x in o) + "\n" + pad + "]"
        return json.dumps(o)

    return enc(obj, 0) + "\n"


def digest(obj: Any) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


def _load_json(text: str, source: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{source}: line {e.lineno}, column {e.colno}: {e.msg}") from None


def read_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as e:
        raise InputError(f"{path}: cannot read: {e}") from None
    return _load_json(text, str(path))


def _field(d: Any, key: str, kind: type, source: str, default: Any = ...) -> Any:
    if not isinstance(d, dict):
        raise InputError(f"{source}: top level must be a JSON object")
    if key not in d:
        if default is not ...:
            return default
        raise InputError(f"{source}: missing field '{key}'")
    v = d[key]
    if kind is int and (not isinstance(v, int) or isinstance(v, bool)):
        raise InputError(f"{source}: field '{key}' must be an integer")
    if kind is list and not isinstance(v, list):
        raise InputError(f"{source}: field '{key}' must be a list")
    return v


def _perm_list(v: list, name: str, source: str) -> list[tuple[int, ...]]:
    out = []
    for idx, p in enumerate(v):
        if not isinstance(p, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in p):
            raise InputError(f"{source}: field '{name}[{idx}]' must be a list of integers")
        out.append(tuple(p))
    return out


def cover_to_dict(cover: MonodromyCover) -> dict:
    return {
        "format": FORMAT,
        "genus": cover.genus,
        "branch_points": cover.branch_count,
        "degree": cover.degree,
        "a": [list(p) for p in cover.a],
        "b": [list(p) for p in cover.b],
        "c": [list(p) for p in cover.c],
    }


def cover_from_dict(d: Any, source: str = "<cover>") -> MonodromyCover:
    fmt = _field(d, "format", int, source, FORMAT)
    if fmt != FORMAT:
        raise InputError(f"{source}: unsupported format {fmt}")
    g = _field(d, "genus", int, source)
    k = _field(d, "branch_points", int, source)
    n = _field(d, "degree", int, source)
    if g < 0 or k < 0:
        raise InputError(f"{source}: genus and branch_points must be non-negative")
    a = _perm_list(_field(d, "a", list, source, []), "a", source)
    b = _perm_list(_field(d, "b", list, source, []), "b", source)
    c = _perm_list(_field(d, "c", list, source, []), "c", source)
    try:
        return validate(g, k, n, a, b, c)
    except InvalidCover as e:
        raise InputError(f"{source}: invalid cover: {e}") from e


def read_cover(path: str | Path) -> MonodromyCover:
    return cover_from_dict(read_json(path), str(path))


def graph_from_dict(d: Any, source: str = "<graph>") -> CoverGraph:
    v = _field(d, "vertices", int, source)
    edges = _field(d, "edges", list, source)
    for idx, e in enumerate(edges):
        if (not isinstance(e, list) or len(e) != 2
                or any(not isinstance(x, int) or isinstance(x, bool) for x in e)):
            raise InputError(f"{source}: field 'edges[{idx}]' must be a pair of integers")
    try:
        return graph(v, edges)
    except GraphError as e:
        raise InputError(f"{source}: {e}") from e


def graph_to_dict(g: CoverGraph) -> dict:
    return {"vertices": g.vertices, "edges": [list(e) for e in g.edges]}


def read_graph(path: str | Path) -> CoverGraph:
    return graph_from_dict(read_json(path), str(path))


def gens_from_dict(d: Any, source: str = "<gens>") -> tuple[list[Automorphism] | None, list[CutPresentation] | None]:
    """Parse {"automorphisms": [{"label", "substitution"}], "cuts": [...]}; absent keys give None."""
    if not isinstance(d, dict):
        raise InputError(f"{source}: top level must be a JSON object")
    autos = None
    if "automorphisms" in d:
        autos = []
        for idx, item in enumerate(_field(d, "automorphisms", list, source)):
            where = f"automorphisms[{idx}]"
            if not isinstance(item, dict) or not isinstance(item.get("label"), str) \
                    or not isinstance(item.get("substitution"), dict):
                raise InputError(f"{source}: field '{where}' needs a string 'label' and an object 'substitution'")
            try:
                autos.append(automorphism_from_strings(item["label"], {
                    str(k): str(v) for k, v in item["substitution"].items()}))
            except WordError as e:
                raise InputError(f"{source}: field '{where}': {e}") from e
    cuts = None
    if "cuts" in d:
        cuts = []
        for idx, item in enumerate(_field(d, "cuts", list, source)):
            try:
                cuts.append(CutPresentation.from_dict(item))
            except (KeyError, TypeError, ValueError) as e:
                raise InputError(f"{source}: field 'cuts[{idx}]': {e}") from e
    return autos, cuts


def read_gens(path: str | Path):
    return gens_from_dict(read_json(path), str(path))


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text)
