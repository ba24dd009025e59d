"""Interchange formats.

JSON is canonical: graphs are ``{"n": int, "edges": [[u, v], ...]}`` with
0-indexed u < v sorted lexicographically, colourings are ``{"k": int,
"colours": [c_0, ..., c_{n-1}]}`` with 1-indexed colours, and recolouring
sequences are ``{"start": <colouring>, "steps": [{"v": int, "to": int}]}``.
DIMACS ``.col`` (1-indexed) is accepted read-only; DOT is write-only.
"""

from __future__ import annotations

import json
from typing import Any

from .colouring import Colouring
from .errors import FormatError, PreconditionError
from .graph import Graph
from .recolouring import RecolouringSequence, RecolouringStep


def _as_obj(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc


def graph_to_json(g: Graph) -> str:
    payload = {"n": g.vertex_count, "edges": [[u, v] for u, v in g.edges()]}
    return json.dumps(payload, separators=(",", ":")) + "\n"


def graph_from_json(text: str) -> Graph:
    obj = _as_obj(text)
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise FormatError('graph JSON needs keys "n" and "edges"')
    n, raw = obj["n"], obj["edges"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise FormatError('"n" must be a non-negative integer')
    if not isinstance(raw, list):
        raise FormatError('"edges" must be a list of pairs')
    edges = []
    for item in raw:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in item)):
            raise FormatError(f"bad edge entry {item!r}")
        u, v = item
        edges.append((min(u, v), max(u, v)))
    try:
        return Graph.from_edges(n, edges)
    except PreconditionError as exc:
        raise FormatError(str(exc)) from exc


def graph_from_dimacs(text: str) -> Graph:
    """Parse DIMACS .col: ``p edge n m`` then ``e u v`` lines, 1-indexed."""
    n = None
    edges: set[tuple[int, int]] = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        fields = line.split()
        if not fields or fields[0] == "c":
            continue
        if fields[0] == "p":
            if n is not None or len(fields) < 3 or fields[1] != "edge":
                raise FormatError(f"line {lineno}: bad problem line")
            try:
                n = int(fields[2])
            except ValueError as exc:
                raise FormatError(f"line {lineno}: bad vertex count") from exc
        elif fields[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before problem line")
            try:
                u, v = int(fields[1]), int(fields[2])
            except (IndexError, ValueError) as exc:
                raise FormatError(f"line {lineno}: bad edge line") from exc
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"line {lineno}: endpoint out of range")
            if u == v:
                raise FormatError(f"line {lineno}: self-loop")
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise FormatError(f"line {lineno}: unknown record {fields[0]!r}")
    if n is None:
        raise FormatError("missing problem line")
    return Graph.from_edges(n, sorted(edges))


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.vertex_count) if not g.adj[v])
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def colouring_to_json(c: Colouring) -> str:
    payload = {"k": c.k, "colours": list(c.colours)}
    return json.dumps(payload, separators=(",", ":")) + "\n"


def colouring_from_json(text: str) -> Colouring:
    obj = _as_obj(text)
    return _colouring_from_obj(obj)


def _colouring_from_obj(obj: Any) -> Colouring:
    if not isinstance(obj, dict) or "k" not in obj or "colours" not in obj:
        raise FormatError('colouring JSON needs keys "k" and "colours"')
    k, cols = obj["k"], obj["colours"]
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise FormatError('"k" must be a non-negative integer')
    if not isinstance(cols, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in cols):
        raise FormatError('"colours" must be a list of integers')
    try:
        return Colouring(k, tuple(cols))
    except PreconditionError as exc:
        raise FormatError(str(exc)) from exc


def sequence_to_json(seq: RecolouringSequence) -> str:
    payload = {
        "start": {"k": seq.start.k, "colours": list(seq.start.colours)},
        "steps": [{"v": s.vertex, "to": s.new_colour} for s in seq.steps],
    }
    return json.dumps(payload, separators=(",", ":")) + "\n"


def sequence_from_json(text: str) -> RecolouringSequence:
    obj = _as_obj(text)
    if not isinstance(obj, dict) or "start" not in obj or "steps" not in obj:
        raise FormatError('sequence JSON needs keys "start" and "steps"')
    start = _colouring_from_obj(obj["start"])
    raw = obj["steps"]
    if not isinstance(raw, list):
        raise FormatError('"steps" must be a list')
    steps = []
    for item in raw:
        if not (isinstance(item, dict) and isinstance(item.get("v"), int) and isinstance(item.get("to"), int)):
            raise FormatError(f"bad step entry {item!r}")
        steps.append(RecolouringStep(item["v"], item["to"]))
    return RecolouringSequence(start, tuple(steps))
