"""File formats: digraph text, path-complex / simplicial / cell-complex JSON.

Digraph text is line oriented::

    # comment
    v a
    v b
    e a b

Every writer emits a canonical byte sequence (fixed key order, sorted
paths, trailing newline) so a write/read/write cycle is byte-stable.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path as FsPath
from typing import Any, Dict, List, Union

from .core import Digraph, PathComplex, VertexSet
from .hochschild import SimplicialComplex


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = "<input>"):
        self.line, self.column, self.source = line, column, source
        super().__init__(f"{source}:{line}:{column}: {message}")


Structure = Union[Digraph, PathComplex, SimplicialComplex]


def parse_digraph(text: str, source: str = "<input>") -> Digraph:
    names: List[str] = []
    seen = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        tok = line.split()
        kind = tok[0]
        if kind == "v":
            if len(tok) != 2:
                raise ParseError("expected 'v <label>'", lineno, col, source)
            if tok[1] in seen:
                raise ParseError(f"vertex {tok[1]!r} declared twice", lineno, line.index(tok[1], col) + 1, source)
            seen.add(tok[1])
            names.append(tok[1])
        elif kind == "e":
            if len(tok) != 3:
                raise ParseError("expected 'e <from> <to>'", lineno, col, source)
            pos = col + 1
            for t in tok[1:]:
                pos = line.index(t, pos) + 1
                if t not in seen:
                    raise ParseError(f"undeclared vertex {t!r}", lineno, pos, source)
            if tok[1] == tok[2]:
                raise ParseError(f"self-loop at {tok[1]!r}", lineno, col, source)
            if (tok[1], tok[2]) in edges:
                raise ParseError(f"duplicate edge {tok[1]} -> {tok[2]}", lineno, col, source)
            edges.append((tok[1], tok[2]))
        else:
            raise ParseError(f"unknown record {kind!r}; expected 'v' or 'e'", lineno, col, source)
    if not names:
        raise ParseError("no vertices", 1, 1, source)
    return Digraph.from_labels(edges, names)


def write_digraph(g: Digraph) -> str:
    lines = [f"v {name}" for name in g.vertex_set.names]
    lines += [f"e {g.vertex_set.names[a]} {g.vertex_set.names[b]}" for a, b in g.sorted_edges()]
    return "\n".join(lines) + "\n"


INLINE_WIDTH = 100


def _dump(x: Any, indent: int) -> str:
    one_line = json.dumps(x, ensure_ascii=False, separators=(", ", ": "))
    if not isinstance(x, (dict, list)) or not x or 2 * indent + len(one_line) <= INLINE_WIDTH:
        return one_line
    pad = "  " * (indent + 1)
    if isinstance(x, dict):
        items = [f"{pad}{json.dumps(k, ensure_ascii=False)}: {_dump(v, indent + 1)}" for k, v in x.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    items = [pad + _dump(v, indent + 1) for v in x]
    return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"


def dump_json(obj: Any) -> str:
    """Canonical JSON: anything fitting in INLINE_WIDTH columns stays on one line."""
    return _dump(obj, 0) + "\n"


def _load_json(text: str, source: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno, source) from exc


def path_complex_to_json(pc: PathComplex) -> Dict[str, Any]:
    names = pc.vertex_set.names
    paths: Dict[str, Any] = {"0": [names[p[0]] for p in pc.P(0)]}
    for n in range(1, pc.top + 1):
        paths[str(n)] = [[names[v] for v in p] for p in pc.P(n)]
    return {"vertices": list(names), "paths": paths}


def path_complex_from_json(obj: Any, source: str = "<input>") -> PathComplex:
    if not isinstance(obj, dict) or "paths" not in obj:
        raise ParseError("path complex JSON needs a 'paths' object", 1, 1, source)
    vertices = obj.get("vertices")
    raw = obj["paths"]
    if not isinstance(raw, dict):
        raise ParseError("'paths' must map dimensions to lists", 1, 1, source)
    labelled = []
    for key, items in raw.items():
        try:
            n = int(key)
        except ValueError:
            raise ParseError(f"dimension key {key!r} is not an integer", 1, 1, source) from None
        for item in items:
            p = [item] if isinstance(item, str) else list(item)
            if len(p) != n + 1 or not all(isinstance(x, str) for x in p):
                raise ParseError(f"entry {item!r} under dimension {n} has the wrong length or type", 1, 1, source)
            labelled.append(p)
    if vertices is None:
        vertices = []
        for p in labelled:
            for x in p:
                if x not in vertices:
                    vertices.append(x)
    unknown = {x for p in labelled for x in p} - set(vertices)
    if unknown:
        raise ParseError(f"paths use undeclared vertices {sorted(unknown)}", 1, 1, source)
    vs = VertexSet(vertices)
    regular = all(a != b for p in labelled for a, b in zip(p, p[1:]))
    return PathComplex.from_paths(vs, [vs.ids(p) for p in labelled], regular=regular)


def simplicial_to_json(s: SimplicialComplex) -> Dict[str, Any]:
    names = s.vertex_set.names
    return {"vertices": list(names), "facets": [[names[v] for v in f] for f in s.facets()]}


def simplicial_from_json(obj: Any, source: str = "<input>") -> SimplicialComplex:
    vertices = None
    if isinstance(obj, dict):
        vertices = obj.get("vertices")
        obj = obj.get("facets")
    if not isinstance(obj, list) or not all(isinstance(f, list) and f and all(isinstance(x, str) for x in f) for f in obj):
        raise ParseError("simplicial JSON is a list of non-empty facets of string labels", 1, 1, source)
    try:
        return SimplicialComplex.from_facets(obj, vertices)
    except (KeyError, ValueError) as exc:
        raise ParseError(str(exc), 1, 1, source) from exc


def parse_structure(text: str, source: str = "<input>") -> Structure:
    """Sniff the format: JSON with 'facets' (or a bare list) is simplicial, JSON with 'paths' a path complex, anything else digraph text."""
    head = text.lstrip()[:1]
    if head in ("{", "["):
        obj = _load_json(text, source)
        if isinstance(obj, list) or (isinstance(obj, dict) and "facets" in obj):
            return simplicial_from_json(obj, source)
        return path_complex_from_json(obj, source)
    return parse_digraph(text, source)


def read_structure(path: str) -> Structure:
    try:
        text = FsPath(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", 0, 0, path) from exc
    return parse_structure(text, path)


def write_structure(obj: Structure) -> str:
    if isinstance(obj, Digraph):
        return write_digraph(obj)
    if isinstance(obj, PathComplex):
        return dump_json(path_complex_to_json(obj))
    return dump_json(simplicial_to_json(obj))


def load_schema(name: str) -> Dict[str, Any]:
    """One of: path_complex, simplicial_complex, cell_complex, homology_report, check_report."""
    ref = resources.files("pathhom") / "schemas" / f"{name}.schema.json"
    return json.loads(ref.read_text(encoding="utf-8"))
