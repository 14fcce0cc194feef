"""Exact minimisers by increasing cardinality.

At each size ``k`` the k-subsets are scanned in lexicographic order, split
into independent subtrees by their smallest element. The first hit is the
optimum and the lexicographically smallest optimal witness, whatever the
worker count.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .errors import GuardrailError, InvalidParameterError, SolverTimeout
from .graph import Graph, VertexSet
from .predicates import (
    check_r,
    is_global_offensive_r_alliance,
    is_independent,
    is_k_dominating,
    is_offensive_r_alliance,
    is_vertex_cover,
)

MAX_EXACT_N = 40


class OracleMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class SolveResult:
    problem: str
    param: int | None
    optimum: int
    witness: VertexSet
    nodes_explored: int
    pruned: int
    elapsed: float

    def to_record(self) -> dict:
        return {
            "problem": self.problem,
            "r": self.param,
            "optimum": self.optimum,
            "witness": list(self.witness.members),
            "nodes": self.nodes_explored,
            "pruned": self.pruned,
            "ms": round(self.elapsed * 1000, 3),
        }


def _prepare(g: Graph, allow_large: bool):
    if g.n == 0:
        raise InvalidParameterError("graph has no vertices")
    if g.n > MAX_EXACT_N and not allow_large:
        raise GuardrailError(f"exact search refused for n={g.n} > {MAX_EXACT_N}; pass allow_large=True to force")
    return g.mask_array(), np.array(g.degrees, dtype=np.int64)


def _first_at_size(g, adj, deg, k, kind, param, backend, workers, deadline):
    """Lexicographically first satisfying k-subset, plus (nodes, pruned)."""
    if k == 0:
        return ((), 1, 0) if K.holds_mask(adj, deg, g.n, 0, kind, param) else (None, 1, 0)
    firsts = range(g.n - k + 1)
    nodes = pruned = 0
    if workers <= 1:
        for f in firsts:
            if deadline is not None and time.monotonic() > deadline:
                raise SolverTimeout(f"deadline hit at size {k}")
            hit, a, b = K.search(backend, adj, deg, g.n, k, kind, param, f)
            nodes += a
            pruned += b
            if hit is not None:
                return hit, nodes, pruned
        return None, nodes, pruned
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(K.search, backend, adj, deg, g.n, k, kind, param, f) for f in firsts]
        found = None
        for fut in futures:
            if found is not None:
                fut.cancel()
                continue
            remaining = None if deadline is None else max(0.0, deadline - time.monotonic())
            try:
                hit, a, b = fut.result(timeout=remaining)
            except TimeoutError:
                for rest in futures:
                    rest.cancel()
                raise SolverTimeout(f"deadline hit at size {k}") from None
            nodes += a
            pruned += b
            if hit is not None:
                found = hit
        return found, nodes, pruned


def _minimize(g, kind, param, floor, ceiling, problem, *, backend=None, workers=1, deadline=None,
              allow_large=False):
    adj, deg = _prepare(g, allow_large)
    backend = backend or K.default_backend()
    start = time.perf_counter()
    nodes = pruned = 0
    for k in range(max(floor, 0), ceiling + 1):
        hit, a, b = _first_at_size(g, adj, deg, k, kind, param, backend, workers, deadline)
        nodes += a
        pruned += b
        if hit is not None:
            return SolveResult(problem, param, k, VertexSet.of(g.n, hit), nodes, pruned,
                               time.perf_counter() - start)
    return None


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def _timeout_to_deadline(timeout):
    return None if timeout is None else time.monotonic() + timeout


def min_offensive_alliance(g: Graph, r: int, *, max_size: int | None = None, timeout: float | None = None,
                           **opts) -> SolveResult | None:
    """Smallest offensive r-alliance.

    Returns None only when ``max_size`` is given and no alliance of at most
    that size exists.
    """
    check_r(g, r)
    floor = max(1, _ceil_half(g.min_degree + r)) if g.is_connected() else 1
    ceiling = g.n if max_size is None else min(max_size, g.n)
    res = _minimize(g, K.OFFENSIVE, r, min(floor, g.n), ceiling, "offensive_alliance",
                    deadline=_timeout_to_deadline(timeout), **opts)
    if res is not None:
        assert is_offensive_r_alliance(g, res.witness, r).holds
    return res


def min_global_offensive_alliance(g: Graph, r: int, *, max_size: int | None = None,
                                  timeout: float | None = None, **opts) -> SolveResult | None:
    check_r(g, r)
    # Any global alliance other than V has a boundary vertex outside it.
    floor = max(1, _ceil_half(g.min_degree + r))
    ceiling = g.n if max_size is None else min(max_size, g.n)
    res = _minimize(g, K.GLOBAL_OFFENSIVE, r, min(floor, g.n), ceiling, "global_offensive_alliance",
                    deadline=_timeout_to_deadline(timeout), **opts)
    if res is not None:
        assert is_global_offensive_r_alliance(g, res.witness, r).holds
    return res


def min_k_dominating(g: Graph, k: int, *, timeout: float | None = None, **opts) -> SolveResult:
    """Smallest k-dominating set. For k above the maximum degree only V qualifies and is returned."""
    if k < 1:
        raise InvalidParameterError("k-domination needs k >= 1")
    problem = "dominating" if k == 1 else "k_dominating"
    if k > g.max_degree:
        _prepare(g, opts.get("allow_large", False))
        return SolveResult(problem, k, g.n, VertexSet.full(g.n), 0, 0, 0.0)
    res = _minimize(g, K.K_DOMINATING, k, min(k, g.n), g.n, problem,
                    deadline=_timeout_to_deadline(timeout), **opts)
    assert is_k_dominating(g, res.witness, k)
    return res


def min_dominating(g: Graph, **opts) -> SolveResult:
    return min_k_dominating(g, 1, **opts)


def independence_number(g: Graph, *, timeout: float | None = None, backend=None, workers=1,
                        allow_large=False) -> SolveResult:
    """Largest independent set; witness is the lexicographically first maximum one."""
    adj, deg = _prepare(g, allow_large)
    backend = backend or K.default_backend()
    deadline = _timeout_to_deadline(timeout)
    start = time.perf_counter()
    nodes = pruned = 0
    best: tuple[int, ...] = ()
    for k in range(1, g.n + 1):
        hit, a, b = _first_at_size(g, adj, deg, k, K.INDEPENDENT, 0, backend, workers, deadline)
        nodes += a
        pruned += b
        if hit is None:
            break
        best = hit
    witness = VertexSet.of(g.n, best)
    assert is_independent(g, witness)
    return SolveResult("independence", None, len(best), witness, nodes, pruned, time.perf_counter() - start)


def min_vertex_cover(g: Graph, *, check: bool = True, timeout: float | None = None, **opts) -> SolveResult:
    """Smallest vertex cover; with ``check`` also solves independence and demands VC = n - alpha."""
    res = _minimize(g, K.VERTEX_COVER, 0, 0, g.n, "vertex_cover", deadline=_timeout_to_deadline(timeout),
                    **opts)
    assert is_vertex_cover(g, res.witness)
    if check:
        alpha = independence_number(g, timeout=timeout, **opts)
        if res.optimum != g.n - alpha.optimum:
            raise OracleMismatch(f"vertex cover {res.optimum} != n - alpha = {g.n} - {alpha.optimum}")
    return SolveResult(res.problem, None, res.optimum, res.witness, res.nodes_explored, res.pruned, res.elapsed)


__all__ = [
    "MAX_EXACT_N",
    "OracleMismatch",
    "SolveResult",
    "min_offensive_alliance",
    "min_global_offensive_alliance",
    "min_k_dominating",
    "min_dominating",
    "independence_number",
    "min_vertex_cover",
]
