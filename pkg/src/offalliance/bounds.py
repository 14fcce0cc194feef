"""Closed-form and spectral bounds on the (global) offensive r-alliance numbers.

All closed forms use integer arithmetic. The only float is the spectral
radius, which is inflated by ``SAFETY`` before dividing so that eigensolver
error can only loosen the spectral bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidParameterError, PreconditionError
from .graph import Graph, line_graph
from .predicates import valid_r_range
from .spectral import laplacian_spectral_radius

SAFETY = 1e-8


class BoundNotApplicable(PreconditionError):
    pass


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _degree_range(g: Graph, r: int) -> None:
    d = g.min_degree
    if not 2 - d <= r <= d:
        raise BoundNotApplicable(f"needs 2 - delta <= r <= delta, i.e. {2 - d} <= r <= {d}")


@dataclass(frozen=True)
class DegreeBounds:
    lower: int
    upper_printed: int
    upper_proof: int

    @property
    def printed_differs(self) -> bool:
        return self.upper_printed != self.upper_proof


def degree_bounds(g: Graph, r: int) -> DegreeBounds:
    """Min-degree sandwich for a_r and gamma_r.

    ``upper_printed`` is ``n - ceil((delta-r+2)/2)``, which undercuts the true
    value whenever delta + r is odd (K5 with r=1 gives 2 < 3). ``upper_proof``
    is the size actually produced by the min-degree-vertex construction,
    ``n - floor((delta-r+2)/2)``.
    """
    _degree_range(g, r)
    d = g.min_degree
    return DegreeBounds(
        lower=ceil_div(d + r, 2),
        upper_printed=g.n - ceil_div(d - r + 2, 2),
        upper_proof=g.n - (d - r + 2) // 2,
    )


def spectral_lower_bound(g: Graph, r: int, mu_star: float | None = None) -> int:
    """``ceil((n / mu*) * ceil((delta + r) / 2))``, valid for global alliances."""
    if r not in valid_r_range(g):
        raise InvalidParameterError(f"r={r} outside the admissible range")
    if not g.is_connected():
        raise BoundNotApplicable("spectral bound needs a connected graph; split into components first")
    if mu_star is None:
        mu_star = laplacian_spectral_radius(g).mu_star
    need = ceil_div(g.min_degree + r, 2)
    inflated = mu_star * (1 + SAFETY)
    return math.ceil(g.n * need / inflated)


def kdom_upper_bound(g: Graph, r: int, gamma_r: int) -> int:
    """``floor((gamma_r + n) / 2)`` where gamma_r is the r-domination number."""
    if r < 1:
        raise BoundNotApplicable("needs r >= 1")
    return (gamma_r + g.n) // 2


def cockayne_upper_bound(g: Graph, r: int) -> int:
    """``floor(n (2r+1) / (2r+2))`` for 1 <= r <= delta."""
    if not 1 <= r <= g.min_degree:
        raise BoundNotApplicable(f"needs 1 <= r <= delta = {g.min_degree}")
    return g.n * (2 * r + 1) // (2 * r + 2)


def _line_graph_need(g: Graph, r: int) -> tuple[int, int]:
    if g.n == 0 or not g.is_regular():
        raise BoundNotApplicable("needs a regular base graph")
    d = g.min_degree
    if d < 2:
        raise BoundNotApplicable("needs degree >= 2")
    if not g.is_connected():
        raise BoundNotApplicable("needs a connected base graph")
    return d, ceil_div(2 * (d - 1) + r, 2)


def line_graph_bound_raw(g: Graph, r: int) -> Fraction:
    """``(n/4) * ceil((2(delta-1)+r)/2)`` exactly, before rounding up."""
    _, need = _line_graph_need(g, r)
    return Fraction(g.n * need, 4)


def line_graph_lower_bound(g: Graph, r: int, check_spectrum: bool = True) -> int:
    """Lower bound on gamma_r of the line graph of a regular graph ``g``.

    With ``check_spectrum`` the Laplacian radius of L(g) is computed and must
    not exceed 2*delta, the value the bound is derived from.
    """
    d, need = _line_graph_need(g, r)
    if check_spectrum:
        lg = line_graph(g)
        mu = laplacian_spectral_radius(lg).mu_star
        if mu > 2 * d * (1 + SAFETY):
            raise AssertionError(f"line graph radius {mu} exceeds 2*delta = {2 * d}")
    return ceil_div(g.n * need, 4)


def sandwich_bounds(g: Graph, r: int, alpha: int | None, gamma_k: int | None) -> tuple[int | None, int | None]:
    """``(gamma_k, n - alpha)`` with k = ceil((delta+r)/2).

    Either half is None when its precondition fails: the lower half needs
    k >= 1, the upper needs 1 <= delta and r <= delta.
    """
    k = ceil_div(g.min_degree + r, 2)
    lower = gamma_k if k >= 1 else None
    upper = g.n - alpha if alpha is not None and g.min_degree >= 1 and r <= g.min_degree else None
    return lower, upper


def sandwich_k(g: Graph, r: int) -> int:
    return ceil_div(g.min_degree + r, 2)


def kn_formula(n: int, r: int) -> int:
    """Offensive r-alliance number of K_n: ceil((n + r - 1) / 2)."""
    if not 3 - n <= r <= n - 1:
        raise InvalidParameterError(f"K_{n} formula needs {3 - n} <= r <= {n - 1}")
    return ceil_div(n + r - 1, 2)


@dataclass
class BoundEntry:
    name: str
    kind: str  # "lower" | "upper"
    value: int | None
    applicable: bool
    note: str = ""
    flagged: bool = False  # printed form known to be false in some cases
    tight: bool | None = None

    def violated_by(self, exact: int) -> bool:
        if not self.applicable or self.value is None:
            return False
        return self.value > exact if self.kind == "lower" else self.value < exact


@dataclass
class BoundsReport:
    r: int
    entries: list[BoundEntry] = field(default_factory=list)
    exact: int | None = None
    mu_star: float | None = None

    def add(self, entry: BoundEntry) -> None:
        if self.exact is not None and entry.applicable and entry.value is not None:
            entry.tight = entry.value == self.exact
        self.entries.append(entry)

    def get(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def violations(self, include_flagged: bool = False) -> list[BoundEntry]:
        if self.exact is None:
            return []
        return [e for e in self.entries if e.violated_by(self.exact) and (include_flagged or not e.flagged)]

    def inconsistent_pairs(self) -> list[tuple[str, str]]:
        lows = [e for e in self.entries if e.kind == "lower" and e.applicable and not e.flagged]
        ups = [e for e in self.entries if e.kind == "upper" and e.applicable and not e.flagged]
        return [(lo.name, up.name) for lo in lows for up in ups if lo.value > up.value]

    def to_record(self) -> dict:
        return {
            "r": self.r,
            "exact": self.exact,
            "mu_star": self.mu_star,
            "bounds": [
                {"name": e.name, "kind": e.kind, "value": e.value, "applicable": e.applicable,
                 "tight": e.tight, "flagged": e.flagged, "note": e.note}
                for e in self.entries
            ],
        }

    def to_table(self) -> str:
        rows = [("bound", "kind", "value", "applicable", "tight", "note")]
        for e in self.entries:
            tight = "-" if e.tight is None else ("yes" if e.tight else "no")
            rows.append((e.name, e.kind, "-" if e.value is None else str(e.value),
                         "yes" if e.applicable else "no", tight, e.note))
        widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]) - 1)]
        lines = []
        for row in rows:
            cells = [row[i].ljust(widths[i]) for i in range(len(widths))] + [row[-1]]
            lines.append("  ".join(cells).rstrip())
        head = f"r = {self.r}" + ("" if self.exact is None else f", exact gamma_r^o = {self.exact}")
        return head + "\n" + "\n".join(lines) + "\n"


def _entry(report, name, kind, fn, note=""):
    try:
        value = fn()
    except BoundNotApplicable as exc:
        report.add(BoundEntry(name, kind, None, False, str(exc)))
        return None
    report.add(BoundEntry(name, kind, value, True, note))
    return value


def bounds_report(g: Graph, r: int, *, exact: int | None = None, gamma_r: int | None = None,
                  alpha: int | None = None, gamma_k: int | None = None, mu_star: float | None = None,
                  line_graph_of: Graph | None = None) -> BoundsReport:
    """Every bound on gamma_r^o(g) for one r.

    Quantities needing exact search (gamma_r, alpha, gamma_k) are taken as
    given; the entries that need them are marked inapplicable when absent.
    ``line_graph_of`` names the regular graph whose line graph ``g`` is, which
    enables the line-graph entry.
    """
    if r not in valid_r_range(g):
        raise InvalidParameterError(f"r={r} outside the admissible range")
    report = BoundsReport(r, exact=exact)
    if g.is_connected() and g.n >= 2:
        report.mu_star = mu_star if mu_star is not None else laplacian_spectral_radius(g).mu_star

    try:
        db = degree_bounds(g, r)
    except BoundNotApplicable as exc:
        for name, kind in (("degree_lower", "lower"), ("degree_upper_printed", "upper"), ("degree_upper", "upper")):
            report.add(BoundEntry(name, kind, None, False, str(exc)))
    else:
        report.add(BoundEntry("degree_lower", "lower", db.lower, True))
        odd = (g.min_degree + r) % 2 == 1
        report.add(BoundEntry("degree_upper_printed", "upper", db.upper_printed, True,
                              "as printed; false when delta+r is odd" if odd else "as printed",
                              flagged=odd))
        report.add(BoundEntry("degree_upper", "upper", db.upper_proof, True, "size of the constructive witness"))

    _entry(report, "spectral_lower", "lower", lambda: spectral_lower_bound(g, r, report.mu_star))

    def kdom():
        if r >= 1 and gamma_r is None:
            raise BoundNotApplicable("needs the r-domination number")
        return kdom_upper_bound(g, r, gamma_r)

    _entry(report, "kdom_upper", "upper", kdom)
    _entry(report, "cockayne_upper", "upper", lambda: cockayne_upper_bound(g, r))

    lower, upper = sandwich_bounds(g, r, alpha, gamma_k)
    k = sandwich_k(g, r)
    report.add(BoundEntry("sandwich_lower", "lower", lower, lower is not None,
                          f"k-domination number, k={k}" if lower is not None else
                          ("needs k >= 1" if k < 1 else "needs gamma_k")))
    report.add(BoundEntry("sandwich_upper", "upper", upper, upper is not None,
                          "n - independence number" if upper is not None else
                          ("needs r <= delta" if r > g.min_degree else "needs alpha")))

    if line_graph_of is not None:
        try:
            value = line_graph_lower_bound(line_graph_of, r)
        except BoundNotApplicable as exc:
            report.add(BoundEntry("line_graph_lower", "lower", None, False, str(exc)))
        else:
            raw = line_graph_bound_raw(line_graph_of, r)
            report.add(BoundEntry("line_graph_lower", "lower", value, True, f"unrounded {raw}"))
    return report
