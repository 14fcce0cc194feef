"""Polynomial-time global offensive alliances built from the bound proofs.

Every builder checks its output with the alliance predicate and refuses to
return an uncertified set.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bounds import ceil_div
from .errors import PreconditionError
from .graph import Graph, VertexSet
from .predicates import AllianceReport, check_r, is_global_offensive_r_alliance, is_k_dominating


class UncertifiedWitness(AssertionError):
    pass


@dataclass(frozen=True)
class WitnessCertificate:
    witness: VertexSet
    claimed_bound: int
    report: AllianceReport
    construction: str

    def to_record(self) -> dict:
        return {
            "construction": self.construction,
            "size": len(self.witness),
            "claimed_bound": self.claimed_bound,
            "witness": list(self.witness.members),
            "certified": self.report.holds and self.report.is_global,
        }


def _certify(g, witness, r, bound, construction):
    report = is_global_offensive_r_alliance(g, witness, r)
    if not report.holds:
        raise UncertifiedWitness(f"{construction}: built set fails at vertices {list(report.failing)}")
    if len(witness) > bound:
        raise UncertifiedWitness(f"{construction}: size {len(witness)} exceeds claimed {bound}")
    return WitnessCertificate(witness, bound, report, construction)


def neighborhood_witness(g: Graph, r: int) -> WitnessCertificate:
    """Complement of {v} + N(v) - Y around a minimum-degree vertex v.

    v is the smallest-index vertex of minimum degree and Y the first
    ceil((delta+r)/2) neighbours of v. The result has exactly
    n - floor((delta-r+2)/2) vertices.
    """
    d = g.min_degree
    if not 2 - d <= r <= d:
        raise PreconditionError(f"needs 2 - delta <= r <= delta, got r={r} with delta={d}")
    check_r(g, r)
    v = g.degrees.index(d)
    nbrs = g.neighbors(v)
    y = nbrs[: ceil_div(d + r, 2)]
    removed = VertexSet.of(g.n, (v, *nbrs)) - VertexSet.of(g.n, y)
    return _certify(g, removed.complement(), r, g.n - (d - r + 2) // 2, "neighborhood")


def local_max_cut(g: Graph, part: VertexSet) -> tuple[VertexSet, VertexSet, int]:
    """Split ``part`` into two sides until no single move enlarges the induced cut.

    Starts from alternating sides in index order and repeatedly moves the
    smallest-index vertex with more same-side than opposite-side neighbours.
    Returns ``(side_a, side_b, moves)``; each move raises the cut by at least
    one, so moves <= m.
    """
    members = part.members
    side = {v: i % 2 for i, v in enumerate(members)}
    moves = 0
    while True:
        for v in members:
            same = sum(1 for u in g.neighbors(v) if u in side and side[u] == side[v])
            other = sum(1 for u in g.neighbors(v) if u in side and side[u] != side[v])
            if same > other:
                side[v] ^= 1
                moves += 1
                break
        else:
            break
    a = VertexSet.of(g.n, (v for v in members if side[v] == 0))
    b = VertexSet.of(g.n, (v for v in members if side[v] == 1))
    return a, b, moves


def cut_witness(g: Graph, r: int, h: VertexSet) -> WitnessCertificate:
    """H plus the smaller side of a locally maximal cut of the complement of H.

    ``h`` must be r-dominating. Only the local property (every vertex has at
    least as many cut neighbours across as on its own side) is needed, so a
    swap local search stands in for a true maximum cut.
    """
    if r < 1:
        raise PreconditionError("needs r >= 1")
    check_r(g, r)
    if not is_k_dominating(g, h, r):
        raise PreconditionError(f"H is not {r}-dominating")
    rest = h.complement()
    a, b, _ = local_max_cut(g, rest)
    if len(a) != len(b):
        x = a if len(a) < len(b) else b
    elif not a:
        x = a
    else:
        x = a if a.members[0] < b.members[0] else b
    for v in rest - x:
        # cut property the certificate relies on
        assert (g.masks[v] & x.mask).bit_count() >= (g.masks[v] & (rest - x).mask).bit_count()
    return _certify(g, h | x, r, (len(h) + g.n) // 2, "cut")


def greedy_independent_set(g: Graph) -> VertexSet:
    taken = 0
    blocked = 0
    for v in range(g.n):
        if not blocked >> v & 1:
            taken |= 1 << v
            blocked |= g.masks[v] | 1 << v
    return VertexSet(taken, g.n)


def independent_complement_witness(g: Graph, r: int) -> WitnessCertificate:
    """Complement of a greedy maximal independent set (ascending index)."""
    d = g.min_degree
    if r > d:
        raise PreconditionError(f"needs r <= delta = {d}")
    if d < 1:
        raise PreconditionError("an isolated vertex can never be dominated from outside")
    check_r(g, r)
    ind = greedy_independent_set(g)
    return _certify(g, ind.complement(), r, g.n - len(ind), "independent_complement")
