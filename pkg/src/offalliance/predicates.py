"""Set properties: offensive r-alliances, domination variants, covers.

The alliance checks return an :class:`AllianceReport` carrying the margin
``deg_S(v) - deg_out(v) - r`` of every boundary vertex, so callers can see how
tight a certificate is, not just whether it holds.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidParameterError
from .graph import Graph, VertexSet, boundary


@dataclass(frozen=True)
class AllianceReport:
    holds: bool
    r: int
    margins: dict[int, int]
    failing: tuple[int, ...]
    is_global: bool
    size: int = field(default=0)

    def to_record(self) -> dict:
        return {
            "holds": self.holds,
            "r": self.r,
            "global": self.is_global,
            "size": self.size,
            "margins": {str(v): mg for v, mg in sorted(self.margins.items())},
            "violations": [{"vertex": v, "margin": self.margins[v]} for v in self.failing],
        }


def valid_r_range(g: Graph) -> range:
    """Admissible alliance parameters ``2 - Delta .. Delta``; empty for edgeless graphs."""
    top = g.max_degree
    return range(2 - top, top + 1)


def check_r(g: Graph, r: int) -> None:
    rr = valid_r_range(g)
    if r not in rr:
        if not rr:
            raise InvalidParameterError("edgeless graph admits no alliance parameter")
        raise InvalidParameterError(f"r={r} outside admissible range [{rr.start}, {rr.stop - 1}]")


def _report(g: Graph, s: VertexSet, r: int, want_global: bool) -> AllianceReport:
    if s.n != g.n:
        raise InvalidParameterError("vertex set universe does not match graph order")
    if not s:
        raise InvalidParameterError("alliances are nonempty by definition")
    check_r(g, r)
    bd = boundary(g, s)
    margins = {}
    failing = []
    for v in bd:
        inside = (g.masks[v] & s.mask).bit_count()
        outside = g.degree(v) - inside
        margin = inside - outside - r
        # Equivalent degree form deg(v) >= 2*deg_out(v) + r must agree.
        assert (margin >= 0) == (g.degree(v) >= 2 * outside + r)
        margins[v] = margin
        if margin < 0:
            failing.append(v)
    dominating = bd.mask == s.complement().mask
    offensive = not failing
    holds = offensive and (dominating or not want_global)
    return AllianceReport(holds, r, margins, tuple(failing), dominating, len(s))


def is_offensive_r_alliance(g: Graph, s: VertexSet, r: int) -> AllianceReport:
    return _report(g, s, r, want_global=False)


def is_global_offensive_r_alliance(g: Graph, s: VertexSet, r: int) -> AllianceReport:
    """Offensive r-alliance that also dominates; ``holds`` needs both."""
    return _report(g, s, r, want_global=True)


def is_dominating(g: Graph, s: VertexSet) -> bool:
    return is_k_dominating(g, s, 1)


def is_k_dominating(g: Graph, s: VertexSet, k: int) -> bool:
    return all((g.masks[v] & s.mask).bit_count() >= k for v in s.complement())


def is_vertex_cover(g: Graph, s: VertexSet) -> bool:
    return all(g.masks[v] & ~s.mask == 0 for v in s.complement())


def is_independent(g: Graph, s: VertexSet) -> bool:
    return all(g.masks[v] & s.mask == 0 for v in s)
