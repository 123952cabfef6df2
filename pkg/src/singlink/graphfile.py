"""Line-oriented text format for plumbing graphs.

::

    graph E8            # optional, first directive only
    vertex 0 -2 0       # vertex <id> <weight> <genus>
    edge 0 1            # edge <id> <id>

Lines starting with ``#`` and blank lines are ignored.  :func:`emit` writes
the canonical form, which :func:`parse` reads back byte for byte.
"""
from __future__ import annotations

from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from .errors import GraphParseError
from .plumbing import PlumbingGraph, Vertex, build_graph

__all__ = ["parse", "emit", "load", "dump"]


def _ints(tokens: List[str], lineno: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse(text: str) -> PlumbingGraph:
    name: Optional[str] = None
    vertices: Dict[int, Vertex] = {}
    edges: List[Tuple[int, int, int]] = []
    seen_directive = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        head, args = tokens[0], tokens[1:]
        if head == "graph":
            if seen_directive:
                raise GraphParseError("'graph' must be the first directive and appear once", lineno)
            if len(args) != 1:
                raise GraphParseError("'graph' takes exactly one name", lineno)
            name = args[0]
        elif head == "vertex":
            if len(args) != 3:
                raise GraphParseError("'vertex' takes <id> <weight> <genus>", lineno)
            vid, weight, genus = _ints(args, lineno)
            if vid in vertices:
                raise GraphParseError(f"duplicate vertex {vid}", lineno)
            if genus < 0:
                raise GraphParseError(f"negative genus on vertex {vid}", lineno)
            vertices[vid] = Vertex(vid, weight, genus)
        elif head == "edge":
            if len(args) != 2:
                raise GraphParseError("'edge' takes <id> <id>", lineno)
            i, j = _ints(args, lineno)
            if i == j:
                raise GraphParseError(f"loop edge at vertex {i}", lineno)
            edges.append((i, j, lineno))
        else:
            raise GraphParseError(f"unknown directive {head!r}", lineno)
        seen_directive = True

    for i, j, lineno in edges:
        for v in (i, j):
            if v not in vertices:
                raise GraphParseError(f"edge references missing vertex {v}", lineno)
    return build_graph(vertices.values(), [(i, j) for i, j, _ in edges], name=name)


def emit(g: PlumbingGraph) -> str:
    lines = []
    if g.name is not None:
        lines.append(f"graph {g.name}")
    lines.extend(f"vertex {v.id} {v.weight} {v.genus}" for v in g.vertices)
    lines.extend(f"edge {i} {j}" for i, j in sorted(g.edges))
    return "\n".join(lines) + "\n"


def load(path: Union[str, Path]) -> PlumbingGraph:
    return parse(Path(path).read_text(encoding="utf-8"))


def dump(g: PlumbingGraph, path: Union[str, Path]) -> None:
    Path(path).write_text(emit(g), encoding="utf-8")
