"""JSON documents pairing a tree with simplex values.

The format mirrors a labeled drawing: a `vertices` object mapping each name
to its value, and an `edges` array of `[u, v, value]` triples. Commands that
only need the tree accept null in place of any value.
"""

from __future__ import annotations

import json
from typing import Any

from .complexes import SimplicialTree, build_tree, edge
from .errors import ParseError
from .morse import MorseFunction, validate
from .stars import StarGraph


def _load(text: str) -> tuple[dict[str, Any], list[tuple[str, str, Any]]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    unknown = set(doc) - {"vertices", "edges"}
    if unknown:
        raise ParseError(f"unexpected keys: {sorted(unknown)}")
    vertices = doc.get("vertices")
    edges = doc.get("edges", [])
    if not isinstance(vertices, dict) or not vertices:
        raise ParseError('"vertices" must be a non-empty object')
    for name, value in vertices.items():
        if not isinstance(name, str):
            raise ParseError(f"vertex name {name!r} is not a string")
        if value is not None and not isinstance(value, (int, float)):
            raise ParseError(f"vertex {name!r} has non-numeric value {value!r}")
    if not isinstance(edges, list):
        raise ParseError('"edges" must be an array')
    triples = []
    for item in edges:
        if not isinstance(item, list) or len(item) not in (2, 3):
            raise ParseError(f"edge entry {item!r} is not [u, v, value]")
        u, v = item[0], item[1]
        value = item[2] if len(item) == 3 else None
        if not isinstance(u, str) or not isinstance(v, str):
            raise ParseError(f"edge endpoints in {item!r} must be strings")
        if value is not None and not isinstance(value, (int, float)):
            raise ParseError(f"edge {item!r} has non-numeric value")
        triples.append((u, v, value))
    return vertices, triples


def parse_tree_document(text: str) -> SimplicialTree:
    """Just the tree; values (and missing edge values) are ignored."""
    vertices, triples = _load(text)
    return build_tree(vertices, [(u, v) for u, v, _ in triples])


def parse_morse_document(text: str) -> MorseFunction:
    """Tree plus fully valued discrete Morse function."""
    vertices, triples = _load(text)
    values: dict = {}
    for name, value in vertices.items():
        if value is None:
            raise ParseError(f"vertex {name!r} needs a value")
        values[name] = value
    tree = build_tree(vertices, [(u, v) for u, v, _ in triples])
    for u, v, value in triples:
        if value is None:
            raise ParseError(f"edge [{u!r}, {v!r}] needs a value")
        values[edge(u, v)] = value
    return validate(tree, values)


def star_document(star: StarGraph, f: MorseFunction) -> str:
    """Serialize a realized star; vertices by value, edges by value."""
    vertices = {
        name: f(name)
        for name in sorted(star.tree.vertices, key=lambda v: f(v))
    }
    edges = [
        [e[0], e[1], f(e)] for e in sorted(star.tree.edges, key=lambda e: f(e))
    ]
    return json.dumps({"vertices": vertices, "edges": edges}, indent=2)
