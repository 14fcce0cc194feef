"""Deterministic graph families used by the tests and the benchmark corpus."""
from __future__ import annotations

import numpy as np

from .errors import InvalidParameterError
from .graph import Graph, from_edge_list

FAMILIES = (
    "complete",
    "cycle",
    "path",
    "complete_bipartite",
    "star",
    "petersen",
    "prism",
    "random_regular",
    "hypercube",
)


def complete(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError("a simple cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def prism(k: int = 3) -> Graph:
    """Cycle C_k times K_2; ``prism(3)`` is the triangular prism."""
    if k < 3:
        raise InvalidParameterError("prism needs k >= 3")
    ring = [(i, (i + 1) % k) for i in range(k)]
    edges = ring + [(u + k, v + k) for u, v in ring] + [(i, i + k) for i in range(k)]
    return from_edge_list(2 * k, edges)


def hypercube(d: int) -> Graph:
    n = 1 << d
    return from_edge_list(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def random_regular(n: int, d: int, seed: int = 0, max_tries: int = 100_000) -> Graph:
    """Uniform-ish d-regular graph from the pairing model, rejecting loops and multi-edges."""
    if d < 0 or n < 0 or (n * d) % 2 or (n > 0 and d >= n):
        raise InvalidParameterError(f"no simple {d}-regular graph on {n} vertices")
    rng = np.random.default_rng(seed)
    points = np.repeat(np.arange(n), d)
    for _ in range(max_tries):
        perm = rng.permutation(points).reshape(-1, 2)
        u, v = perm[:, 0], perm[:, 1]
        if np.any(u == v):
            continue
        key = np.minimum(u, v) * n + np.maximum(u, v)
        if len(np.unique(key)) != len(key):
            continue
        return from_edge_list(n, zip(u.tolist(), v.tolist()))
    raise InvalidParameterError(f"pairing model failed for n={n}, d={d} after {max_tries} tries")


_ARITY = {
    "complete": 1,
    "cycle": 1,
    "path": 1,
    "complete_bipartite": 2,
    "star": 1,
    "petersen": 0,
    "prism": 1,
    "hypercube": 1,
}


def generate(family: str, *params: int, seed: int = 0) -> Graph:
    """Build a named family member, e.g. ``generate("cycle", 6)``."""
    if family == "random_regular":
        if len(params) != 2:
            raise InvalidParameterError("random_regular takes n and d")
        return random_regular(*params, seed=seed)
    try:
        arity = _ARITY[family]
    except KeyError:
        raise InvalidParameterError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}") from None
    if family == "prism" and not params:
        params = (3,)
    if len(params) != arity:
        raise InvalidParameterError(f"{family} takes {arity} integer parameter(s), got {len(params)}")
    return globals()[family](*params)
