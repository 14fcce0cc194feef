"""Immutable simple graphs and vertex subsets.

Vertices are dense 0-based integers. Every vertex subset is carried as a
Python int bitmask, so neighbourhood counts reduce to ``(adj & S).bit_count()``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidParameterError


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``{0, ..., n-1}`` stored as a bitmask."""

    mask: int
    n: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise InvalidParameterError(f"vertex set {self.mask:#x} exceeds universe of size {self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> VertexSet:
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise InvalidParameterError(f"vertex {v} outside 0..{n - 1}")
            mask |= 1 << v
        return cls(mask, n)

    @classmethod
    def empty(cls, n: int) -> VertexSet:
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls((1 << n) - 1, n)

    def complement(self) -> VertexSet:
        return VertexSet(((1 << self.n) - 1) ^ self.mask, self.n)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    def rank(self, v: int) -> int:
        """Position of ``v`` among the sorted members."""
        if v not in self:
            raise KeyError(v)
        return (self.mask & ((1 << v) - 1)).bit_count()

    def lex_key(self) -> tuple[int, tuple[int, ...]]:
        """Sort key: cardinality first, then the sorted member tuple."""
        return len(self), self.members

    def __contains__(self, v: object) -> bool:
        return isinstance(v, (int, np.integer)) and 0 <= v < self.n and bool(self.mask >> int(v) & 1)

    def __iter__(self):
        return _bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def _check(self, other: VertexSet) -> None:
        if other.n != self.n:
            raise InvalidParameterError("vertex sets over different universes")

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.mask | other.mask, self.n)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.mask & other.mask, self.n)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.mask & ~other.mask, self.n)

    def __repr__(self) -> str:
        return f"VertexSet({list(self.members)}, n={self.n})"


@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple[int, ...]

    @property
    def max_degree(self) -> int:
        return self.degrees[0] if self.degrees else 0

    @property
    def min_degree(self) -> int:
        return self.degrees[-1] if self.degrees else 0

    def all_even(self) -> bool:
        return all(d % 2 == 0 for d in self.degrees)

    def all_odd(self) -> bool:
        return all(d % 2 == 1 for d in self.degrees)


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Build through :func:`from_edge_list` (or :meth:`from_labeled_edges`);
    the constructor trusts its inputs.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    masks: tuple[int, ...] = field(repr=False)
    m: int
    labels: tuple[str, ...] | None = field(default=None, repr=False)

    @classmethod
    def from_labeled_edges(cls, pairs: Iterable[tuple[object, object]], vertices: Sequence[object] = ()) -> Graph:
        """Remap arbitrary hashable labels onto 0..n-1 in first-seen order."""
        index: dict[object, int] = {}
        for v in vertices:
            index.setdefault(v, len(index))
        edges = []
        for u, v in pairs:
            edges.append((index.setdefault(u, len(index)), index.setdefault(v, len(index))))
        g = from_edge_list(len(index), edges)
        return cls(g.n, g.adjacency, g.masks, g.m, tuple(str(x) for x in index))

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence(tuple(sorted(self.degrees, reverse=True)))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def is_regular(self) -> bool:
        return len(set(self.degrees)) <= 1

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.masks[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def laplacian(self) -> np.ndarray:
        a = self.adjacency_matrix()
        return np.diag(a.sum(axis=1)) - a

    def mask_array(self) -> np.ndarray:
        """Adjacency bitmasks as uint64 for the search kernels (n <= 64)."""
        if self.n > 64:
            raise InvalidParameterError("bitmask kernels support at most 64 vertices")
        return np.array(self.masks, dtype=np.uint64)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise InvalidParameterError("vertex count must be non-negative")
    masks = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidParameterError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InvalidParameterError(f"self-loop at vertex {u}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    adjacency = tuple(tuple(_bits(mk)) for mk in masks)
    m = sum(len(a) for a in adjacency) // 2
    return Graph(n, adjacency, tuple(masks), m)


def neighbors_in(g: Graph, v: int, x: VertexSet) -> VertexSet:
    _check_vertex(g, v)
    return VertexSet(g.masks[v] & x.mask, g.n)


def degree_in(g: Graph, v: int, x: VertexSet) -> int:
    _check_vertex(g, v)
    return (g.masks[v] & x.mask).bit_count()


def boundary(g: Graph, s: VertexSet) -> VertexSet:
    """Vertices outside ``s`` with at least one neighbour in ``s``."""
    reach = 0
    for v in s:
        reach |= g.masks[v]
    return VertexSet(reach & ~s.mask, g.n)


def line_graph(g: Graph) -> Graph:
    edges = g.edges()
    if not edges:
        raise InvalidParameterError("line graph of an edgeless graph is empty")
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs = set()
    for inc in incident:
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                pairs.add((inc[a], inc[b]))
    lg = from_edge_list(len(edges), sorted(pairs))
    return Graph(lg.n, lg.adjacency, lg.masks, lg.m, tuple(f"{u}-{v}" for u, v in edges))


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise InvalidParameterError(f"vertex {v} outside 0..{g.n - 1}")
