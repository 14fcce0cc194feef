"""Gadget constructions from the hardness proofs, with small-instance checks.

Three constructions are provided:

* ``oa_downshift_gadget``: three layers of G plus a clique of size n-r+2,
  relating offensive r-alliances of G to (r-1)-alliances of the gadget with
  sizes k -> 2k.
* ``goa_gadget_low`` (r <= 1): pendant paths v-a-b hung on every vertex.
* ``goa_gadget_high`` (r >= 2): A-vertices on every vertex and one B-vertex
  per r-subset of them.

Both domination gadgets map a dominating set of size k to a global offensive
r-alliance of size k + (r-1)n + 2m. The ``verify_*`` helpers compute both
sides exactly and report whether the claimed size relation holds.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from . import _kernels as K
from .errors import PreconditionError
from .graph import Graph, VertexSet, from_edge_list
from .io import serialize_edge_list
from .predicates import (
    check_r,
    is_dominating,
    is_global_offensive_r_alliance,
    is_offensive_r_alliance,
    valid_r_range,
)
from .solvers import MAX_EXACT_N, min_dominating, min_global_offensive_alliance, min_offensive_alliance, \
    min_vertex_cover

DEFAULT_BUDGET = 64


def tag_str(tag: tuple) -> str:
    kind, *rest = tag
    if kind == "bvertex":
        v, members = rest
        return f"bvertex({v},{'-'.join(map(str, members))})"
    return f"{kind}({','.join(map(str, rest))})"


@dataclass(frozen=True)
class ReductionArtifact:
    kind: str  # "downshift" | "goa-low" | "goa-high"
    source: Graph
    r: int
    gprime: Graph
    labels: tuple[tuple, ...]
    size_scale: int
    size_offset: int
    preconditions_met: bool = True

    @property
    def target_r(self) -> int:
        return self.r - 1 if self.kind == "downshift" else self.r

    def size_map(self, k: int) -> int:
        return self.size_scale * k + self.size_offset

    def vertices_tagged(self, kind: str) -> list[int]:
        return [i for i, t in enumerate(self.labels) if t[0] == kind]

    def label_map(self) -> dict[str, str]:
        return {str(i): tag_str(t) for i, t in enumerate(self.labels)}

    def to_edge_list(self) -> str:
        return serialize_edge_list(self.gprime)

    def sidecar_json(self) -> str:
        return json.dumps({"schema": 1, "kind": self.kind, "r": self.r, "target_r": self.target_r,
                           "size_map": {"scale": self.size_scale, "offset": self.size_offset},
                           "labels": self.label_map()}, indent=2, sort_keys=True)


def _check_budget(total: int, budget: int) -> None:
    if total > budget:
        raise PreconditionError(f"gadget would have {total} vertices, over the budget of {budget}")


def oa_downshift_gadget(g: Graph, r: int, budget: int = DEFAULT_BUDGET) -> ReductionArtifact:
    n = g.n
    clique = n - r + 2
    if n < 1 or clique < 1:
        raise PreconditionError(f"clique size n - r + 2 = {clique} must be positive")
    _check_budget(3 * n + clique, budget)
    labels = [("layer", u, layer) for layer in (1, 2, 3) for u in range(n)]
    labels += [("clique", j) for j in range(1, clique + 1)]

    def at(u, layer):
        return (layer - 1) * n + u

    edges = []
    for u, v in g.edges():
        edges += [(at(u, 1), at(v, 1)), (at(u, 2), at(v, 2))]
    for u in range(n):
        edges += [(at(u, 1), at(u, 3)), (at(u, 2), at(u, 3))]
        edges += [(at(u, 3), 3 * n + j) for j in range(clique)]
    edges += [(3 * n + i, 3 * n + j) for i in range(clique) for j in range(i + 1, clique)]
    gp = from_edge_list(3 * n + clique, edges)
    return ReductionArtifact("downshift", g, r, gp, tuple(labels), 2, 0)


def _domination_offset(g: Graph, r: int) -> int:
    return (r - 1) * g.n + 2 * g.m


def goa_gadget_low(g: Graph, r: int, budget: int = DEFAULT_BUDGET) -> ReductionArtifact:
    if r > 1:
        raise PreconditionError("the pendant-path gadget covers r <= 1")
    if g.min_degree < abs(r) + 1:
        raise PreconditionError(f"needs minimum degree >= |r| + 1 = {abs(r) + 1}, got {g.min_degree}")
    chains = [g.degree(v) + r - 1 for v in range(g.n)]
    _check_budget(g.n + 2 * sum(chains), budget)
    labels = [("original", v) for v in range(g.n)]
    edges = list(g.edges())
    for v in range(g.n):
        for i in range(1, chains[v] + 1):
            a = len(labels)
            labels += [("avertex", v, i), ("bvertex", v, (i,))]
            edges += [(v, a), (a, a + 1)]
    gp = from_edge_list(len(labels), edges)
    return ReductionArtifact("goa-low", g, r, gp, tuple(labels), 1, _domination_offset(g, r))


def goa_gadget_high(g: Graph, r: int, budget: int = DEFAULT_BUDGET) -> ReductionArtifact:
    if r < 2:
        raise PreconditionError("the subset gadget covers r >= 2")
    if g.min_degree < 1:
        raise PreconditionError("needs minimum degree >= 1")
    sizes = [g.degree(v) + r - 1 for v in range(g.n)]
    _check_budget(g.n + sum(sizes) + sum(comb(s, r) for s in sizes), budget)
    labels = [("original", v) for v in range(g.n)]
    edges = list(g.edges())
    for v in range(g.n):
        first_a = len(labels)
        labels += [("avertex", v, i) for i in range(1, sizes[v] + 1)]
        edges += [(v, first_a + i) for i in range(sizes[v])]
        for subset in combinations(range(1, sizes[v] + 1), r):
            b = len(labels)
            labels.append(("bvertex", v, subset))
            edges += [(first_a + i - 1, b) for i in subset]
    gp = from_edge_list(len(labels), edges)
    return ReductionArtifact("goa-high", g, r, gp, tuple(labels), 1, _domination_offset(g, r))


def build(kind: str, g: Graph, r: int, budget: int = DEFAULT_BUDGET) -> ReductionArtifact:
    builders = {"downshift": oa_downshift_gadget, "goa-low": goa_gadget_low, "goa-high": goa_gadget_high}
    try:
        return builders[kind](g, r, budget)
    except KeyError:
        raise PreconditionError(f"unknown gadget {kind!r}; choose from {', '.join(builders)}") from None


def map_certificate(artifact: ReductionArtifact, source_solution: VertexSet) -> VertexSet:
    """Push a source certificate through the gadget.

    Downshift: an offensive r-alliance S becomes S x {1, 2}. Domination
    gadgets: a dominating set D becomes D plus every A-vertex. The image is
    returned as built; check it with the target predicate.
    """
    g = artifact.source
    if artifact.kind == "downshift":
        if not source_solution or not is_offensive_r_alliance(g, source_solution, artifact.r).holds:
            raise PreconditionError(f"source set is not an offensive {artifact.r}-alliance")
        return VertexSet.of(artifact.gprime.n, [u + layer * g.n for layer in (0, 1) for u in source_solution])
    if not is_dominating(g, source_solution):
        raise PreconditionError("source set is not dominating")
    return VertexSet.of(artifact.gprime.n, [*source_solution, *artifact.vertices_tagged("avertex")])


def target_report(artifact: ReductionArtifact, image: VertexSet):
    if artifact.kind == "downshift":
        return is_offensive_r_alliance(artifact.gprime, image, artifact.target_r)
    return is_global_offensive_r_alliance(artifact.gprime, image, artifact.target_r)


@dataclass(frozen=True)
class EquivalenceCheck:
    kind: str
    r: int
    source_optimum: int
    predicted: int
    observed: int | None  # None: nothing up to predicted + 1
    gadget_order: int

    @property
    def holds(self) -> bool:
        return self.observed == self.predicted

    def to_record(self) -> dict:
        return {"kind": self.kind, "r": self.r, "source_optimum": self.source_optimum,
                "predicted": self.predicted, "observed": self.observed, "holds": self.holds,
                "gadget_order": self.gadget_order}


def verify_gadget(artifact: ReductionArtifact, **opts) -> EquivalenceCheck:
    """Exact optimum on both sides, searching the gadget only up to the predicted size + 1."""
    g, gp = artifact.source, artifact.gprime
    if artifact.kind == "downshift":
        src = min_offensive_alliance(g, artifact.r, **opts).optimum
        predicted = artifact.size_map(src)
        check_r(gp, artifact.target_r)
        res = min_offensive_alliance(gp, artifact.target_r, max_size=predicted + 1, **opts)
    else:
        src = min_dominating(g, **opts).optimum
        predicted = artifact.size_map(src)
        res = min_global_offensive_alliance(gp, artifact.target_r, max_size=predicted + 1, **opts)
    return EquivalenceCheck(artifact.kind, artifact.r, src, predicted, None if res is None else res.optimum, gp.n)


def verify_regular_vc_equivalence(g: Graph, r: int, subsets: bool = True, **opts) -> bool:
    """Vertex covers versus offensive r-alliances on a connected regular graph.

    Preconditions: degree r with r >= 3, or cubic with r = 2. Compares the two
    optima and, with ``subsets``, the two predicates on every nonempty subset.
    """
    if not g.is_connected():
        raise PreconditionError("graph must be connected")
    if not g.is_regular():
        raise PreconditionError("graph must be regular")
    d = g.min_degree
    if not ((d == r and r >= 3) or (d == 3 and r == 2)):
        raise PreconditionError(f"needs an r-regular graph with r >= 3, or a cubic graph with r = 2 (degree {d}, r={r})")
    if g.n > MAX_EXACT_N:
        raise PreconditionError(f"n={g.n} is over the exact-search guardrail")
    same_optimum = min_vertex_cover(g, **opts).optimum == min_offensive_alliance(g, r, **opts).optimum
    if not subsets:
        return same_optimum
    return same_optimum and subset_level_agreement(g, r)


def subset_level_agreement(g: Graph, r: int, limit: int = 22) -> bool:
    """True when vertex cover and offensive r-alliance agree on every nonempty subset."""
    if g.n > limit:
        raise PreconditionError(f"subset enumeration refused for n={g.n} > {limit}")
    if r not in valid_r_range(g):
        raise PreconditionError(f"r={r} outside the admissible range")
    adj = g.mask_array()
    deg = np.array(g.degrees, dtype=np.int64)
    total = 1 << g.n
    step = 1 << 16
    for lo in range(1, total, step):
        masks = np.arange(lo, min(lo + step, total), dtype=np.uint64)
        cover = K.holds_batch(adj, deg, g.n, masks, K.VERTEX_COVER, 0)
        offensive = K.holds_batch(adj, deg, g.n, masks, K.OFFENSIVE, r)
        if not np.array_equal(cover, offensive):
            return False
    return True
