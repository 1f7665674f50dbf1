"""Text formats: DIMACS .col, 0-based edge lists, family descriptors, DOT and JSON colorings."""

from __future__ import annotations

import json
import re
from typing import Sequence

from .coloring import Coloring
from .errors import ColoringError, GraphError
from .graph import Graph, make_family

__all__ = [
    "GRAPH_FORMATS",
    "parse_graph",
    "emit_graph",
    "emit_dot",
    "dump_coloring",
    "load_coloring",
    "parse_family",
]

GRAPH_FORMATS = ("dimacs", "edge-list", "family")


def _parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphError(f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphError(f"line {lineno}: malformed header {line!r}")
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise GraphError(f"line {lineno}: malformed header {line!r}") from None
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: malformed edge {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphError(f"line {lineno}: malformed edge {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"line {lineno}: vertex out of range 1..{n} in {line!r}")
            if u != v:
                edges.append((u - 1, v - 1))
        else:
            raise GraphError(f"line {lineno}: unknown record {line!r}")
    if n is None:
        raise GraphError("missing 'p edge n m' header")
    return Graph(n, edges)


def _parse_edge_list(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphError("empty edge list")
    try:
        n = int(rows[0][0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:  # also catches rows without exactly two fields
        raise GraphError(f"malformed edge list: {exc}") from None
    return Graph(n, edges)


def parse_family(text: str) -> Graph:
    """Build a family graph from a descriptor such as ``path 4`` or ``torus 4,4``."""
    tokens = [t for t in re.split(r"[\s,:]+", text.strip()) if t]
    if not tokens:
        raise GraphError("empty family descriptor")
    try:
        sizes = [int(t) for t in tokens[1:]]
    except ValueError:
        raise GraphError(f"malformed family descriptor {text!r}") from None
    return make_family(tokens[0], *sizes)


def parse_graph(text: str, fmt: str = "dimacs") -> Graph:
    if fmt == "dimacs":
        return _parse_dimacs(text)
    if fmt == "edge-list":
        return _parse_edge_list(text)
    if fmt == "family":
        return parse_family(text)
    raise GraphError(f"unknown graph format {fmt!r}")


def emit_graph(g: Graph, fmt: str = "dimacs") -> str:
    if fmt == "dimacs":
        lines = [f"p edge {g.n} {g.num_edges}"]
        lines += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    elif fmt == "edge-list":
        lines = [f"{g.n} {g.num_edges}"]
        lines += [f"{u} {v}" for u, v in g.edges]
    else:
        raise GraphError(f"cannot emit graph format {fmt!r}")
    return "\n".join(lines) + "\n"


def emit_dot(g: Graph, coloring: Coloring | None = None, name: str = "G") -> str:
    """Undirected DOT; colored vertices are labelled ``v<i>:<color>``."""
    if coloring is not None and coloring.n != g.n:
        raise ColoringError("coloring does not match the graph")
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if coloring is not None and coloring[v]:
            lines.append(f'  v{v} [label="v{v}:{coloring[v]}"];')
        else:
            lines.append(f"  v{v};")
    lines += [f"  v{u} -- v{v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_coloring(c: Coloring | Sequence[int]) -> str:
    colors = list(c.colors if isinstance(c, Coloring) else c)
    return json.dumps({"n": len(colors), "colors": colors})


def load_coloring(text: str) -> Coloring:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ColoringError(f"coloring document is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "n" not in doc or "colors" not in doc:
        raise ColoringError("coloring document needs fields 'n' and 'colors'")
    colors = doc["colors"]
    if not isinstance(colors, list) or len(colors) != doc["n"]:
        raise ColoringError("'colors' must be a list of length n")
    if any(not isinstance(c, int) or c < 0 for c in colors):
        raise ColoringError("colors must be non-negative integers")
    return Coloring(tuple(colors))
