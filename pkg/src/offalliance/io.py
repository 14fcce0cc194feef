"""Edge-list and DIMACS text formats.

Edge list: header ``n m`` then ``m`` lines ``u v`` (0-based). Lines starting
with ``#`` and blank lines are ignored.
DIMACS: ``c`` comments, one ``p edge n m`` line, then ``e u v`` (1-based).
Serialisation is canonical: each edge once as ``u < v``, sorted.
"""
from __future__ import annotations

import sys
from pathlib import Path

from .errors import GraphFormatError, InvalidParameterError
from .graph import Graph, from_edge_list


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _build(n, edges):
    try:
        return from_edge_list(n, edges)
    except InvalidParameterError as exc:
        raise GraphFormatError(str(exc)) from None


def parse_edge_list(text: str) -> Graph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected two fields, got {len(tokens)}", lineno)
        a, b = _ints(tokens, lineno)
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("negative count in header", lineno)
            header = (a, b)
            continue
        if not (0 <= a < header[0] and 0 <= b < header[0]):
            raise GraphFormatError(f"endpoint outside 0..{header[0] - 1}", lineno)
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a}", lineno)
        edges.append((a, b))
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header announces {header[1]} edges, found {len(edges)}")
    return _build(header[0], edges)


def parse_dimacs(text: str) -> Graph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if header is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(tokens) != 4:
                raise GraphFormatError("problem line must read 'p edge n m'", lineno)
            header = tuple(_ints(tokens[2:], lineno))
        elif tokens[0] == "e":
            if header is None:
                raise GraphFormatError("edge line before problem line", lineno)
            if len(tokens) != 3:
                raise GraphFormatError("edge line must read 'e u v'", lineno)
            u, v = _ints(tokens[1:], lineno)
            if not (1 <= u <= header[0] and 1 <= v <= header[0]):
                raise GraphFormatError(f"endpoint outside 1..{header[0]}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unknown line type {tokens[0]!r}", lineno)
    if header is None:
        raise GraphFormatError("missing 'p edge n m' line")
    if len(edges) != header[1]:
        raise GraphFormatError(f"problem line announces {header[1]} edges, found {len(edges)}")
    return _build(header[0], edges)


def looks_like_dimacs(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            return line[0] in "cpe"
    return False


def parse(text: str, fmt: str = "auto") -> Graph:
    if fmt == "auto":
        fmt = "dimacs" if looks_like_dimacs(text) else "edgelist"
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise InvalidParameterError(f"unknown graph format {fmt!r}")


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def serialize_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def serialize(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "dimacs":
        return serialize_dimacs(g)
    if fmt == "edgelist":
        return serialize_edge_list(g)
    raise InvalidParameterError(f"unknown graph format {fmt!r}")


def read_graph(source: str, fmt: str = "auto") -> Graph:
    """Read from a path, or from stdin when ``source`` is ``-``."""
    text = sys.stdin.read() if source == "-" else Path(source).read_text()
    return parse(text, fmt)
