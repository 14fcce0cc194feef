"""Subset-search kernels over uint64 adjacency bitmasks.

Two interchangeable backends answer the same question: the lexicographically
first k-subset whose smallest element is ``first`` and which satisfies the
predicate ``kind``.

* ``numba``: depth-first enumeration in lexicographic order with
  partial-assignment pruning, compiled with ``@njit(nogil=True)`` so worker
  threads run truly in parallel.
* ``numpy``: the same lexicographic stream evaluated in vectorised batches,
  no pruning.

Select with ``OFFALLIANCE_BACKEND=numba|numpy``; numba is the default when it
imports.
"""
from __future__ import annotations

import os
from itertools import chain, combinations, islice

import numpy as np

OFFENSIVE = 0
GLOBAL_OFFENSIVE = 1
K_DOMINATING = 2
VERTEX_COVER = 3
INDEPENDENT = 4

KIND_NAMES = {
    OFFENSIVE: "offensive",
    GLOBAL_OFFENSIVE: "global_offensive",
    K_DOMINATING: "k_dominating",
    VERTEX_COVER: "vertex_cover",
    INDEPENDENT: "independent",
}

_BATCH = 1 << 15

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba ships with the env
    HAVE_NUMBA = False


def default_backend() -> str:
    requested = os.environ.get("OFFALLIANCE_BACKEND", "").strip().lower()
    if requested == "numpy":
        return "numpy"
    if requested in ("", "numba"):
        return "numba" if HAVE_NUMBA else "numpy"
    raise ValueError(f"OFFALLIANCE_BACKEND must be 'numba' or 'numpy', got {requested!r}")


# ---------------------------------------------------------------- numpy path

def holds_batch(adj, deg, n, masks, kind, param):
    ok = np.ones(len(masks), dtype=bool)
    one = np.uint64(1)
    for v in range(n):
        in_s = (masks >> np.uint64(v)) & one
        in_s = in_s.astype(bool)
        if kind == VERTEX_COVER:
            bad = ~in_s & ((adj[v] & ~masks) != 0)
        else:
            a = np.bitwise_count(masks & adj[v]).astype(np.int64)
            if kind == OFFENSIVE:
                bad = ~in_s & (a > 0) & (2 * a < deg[v] + param)
            elif kind == GLOBAL_OFFENSIVE:
                bad = ~in_s & ((a == 0) | (2 * a < deg[v] + param))
            elif kind == K_DOMINATING:
                bad = ~in_s & (a < param)
            else:
                bad = in_s & (a > 0)
        ok &= ~bad
    return ok


def search_numpy(adj, deg, n, k, kind, param, first):
    """Returns ``(members or None, nodes, pruned)``."""
    head = np.uint64(1) << np.uint64(first)
    rest = combinations(range(first + 1, n), k - 1)
    nodes = 0
    while True:
        block = list(islice(rest, _BATCH))
        if not block:
            return None, nodes, 0
        if k == 1:
            masks = np.full(len(block), head, dtype=np.uint64)
        else:
            idx = np.fromiter(chain.from_iterable(block), dtype=np.uint64, count=len(block) * (k - 1))
            bits = np.left_shift(np.uint64(1), idx.reshape(-1, k - 1))
            masks = np.bitwise_or.reduce(bits, axis=1) | head
        hits = np.flatnonzero(holds_batch(adj, deg, n, masks, kind, param))
        if len(hits):
            nodes += int(hits[0]) + 1
            return (first,) + block[hits[0]], nodes, 0
        nodes += len(block)


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:
    _ONE = np.uint64(1)
    _ZERO = np.uint64(0)
    _M1 = np.uint64(0x5555555555555555)
    _M2 = np.uint64(0x3333333333333333)
    _M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
    _H01 = np.uint64(0x0101010101010101)

    @numba.njit(inline="always", cache=True)
    def _popcount(x):
        x = x - ((x >> _ONE) & _M1)
        x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
        x = (x + (x >> np.uint64(4))) & _M4
        return np.int64((x * _H01) >> np.uint64(56))

    @numba.njit(inline="always", cache=True)
    def _upto(last):
        # bits 0..last inclusive, safe for last == 63
        return ((_ONE << np.uint64(last)) - _ONE) | (_ONE << np.uint64(last))

    @numba.njit(cache=True, nogil=True)
    def _holds_one(adj, deg, n, s, kind, param):
        for v in range(n):
            inside = (s >> np.uint64(v)) & _ONE
            if kind == INDEPENDENT:
                if inside and (adj[v] & s) != _ZERO:
                    return False
                continue
            if inside:
                continue
            if kind == VERTEX_COVER:
                if (adj[v] & ~s) != _ZERO:
                    return False
                continue
            a = _popcount(adj[v] & s)
            if kind == OFFENSIVE:
                if a > 0 and 2 * a < deg[v] + param:
                    return False
            elif kind == GLOBAL_OFFENSIVE:
                if a == 0 or 2 * a < deg[v] + param:
                    return False
            elif a < param:
                return False
        return True

    @numba.njit(cache=True, nogil=True)
    def _extendable(adj, deg, n, s, last, rem, newv, kind, param):
        """False when no completion of the partial choice can satisfy the predicate.

        Vertices ``<= last`` outside ``s`` are settled as outside; only vertices
        above ``last`` may still join, at most ``rem`` of them.
        """
        if kind == INDEPENDENT:
            return (adj[newv] & s) == _ZERO
        open_ = ~_upto(last)
        for u in range(last + 1):
            if (s >> np.uint64(u)) & _ONE:
                continue
            if kind == VERTEX_COVER:
                if (adj[u] & ~s & ~open_) != _ZERO or _popcount(adj[u] & open_) > rem:
                    return False
                continue
            have = _popcount(adj[u] & s)
            best = have + min(rem, _popcount(adj[u] & open_))
            if kind == OFFENSIVE:
                if have > 0 and 2 * best < deg[u] + param:
                    return False
            elif kind == GLOBAL_OFFENSIVE:
                if best == 0 or 2 * best < deg[u] + param:
                    return False
            elif best < param:
                return False
        return True

    @numba.njit(cache=True, nogil=True)
    def _search_numba(adj, deg, n, k, kind, param, first, out, stats):
        c = np.empty(k, dtype=np.int64)
        c[0] = first
        s = _ONE << np.uint64(first)
        stats[0] += 1
        if not _extendable(adj, deg, n, s, first, k - 1, first, kind, param):
            stats[1] += 1
            return False
        if k == 1:
            if _holds_one(adj, deg, n, s, kind, param):
                out[0] = first
                return True
            return False
        d = 1
        c[1] = first
        while True:
            c[d] += 1
            if c[d] > n - (k - d):
                d -= 1
                if d == 0:
                    return False
                s &= ~(_ONE << np.uint64(c[d]))
                continue
            v = c[d]
            s2 = s | (_ONE << np.uint64(v))
            stats[0] += 1
            if not _extendable(adj, deg, n, s2, v, k - d - 1, v, kind, param):
                stats[1] += 1
                continue
            if d == k - 1:
                if _holds_one(adj, deg, n, s2, kind, param):
                    for i in range(k):
                        out[i] = c[i]
                    return True
                continue
            s = s2
            d += 1
            c[d] = v


def search_numba(adj, deg, n, k, kind, param, first):
    out = np.empty(k, dtype=np.int64)
    stats = np.zeros(2, dtype=np.int64)
    found = _search_numba(adj, deg, n, k, kind, param, first, out, stats)
    members = tuple(int(x) for x in out) if found else None
    return members, int(stats[0]), int(stats[1])


def holds_mask(adj, deg, n, mask, kind, param) -> bool:
    """Evaluate one subset; shared by both backends for the k = 0 and k = n edges."""
    return bool(holds_batch(adj, deg, n, np.array([mask], dtype=np.uint64), kind, param)[0])


def search(backend, adj, deg, n, k, kind, param, first):
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not importable")
        return search_numba(adj, deg, n, k, kind, param, first)
    if backend == "numpy":
        return search_numpy(adj, deg, n, k, kind, param, first)
    raise ValueError(f"unknown backend {backend!r}")
