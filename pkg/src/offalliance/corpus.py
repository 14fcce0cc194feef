"""Corpus runs: every bound, witness and exact value per (graph, r), plus the
cross-row laws (monotonicity in r, parity collapse, K_n closed form, cubic
vertex-cover equivalence, line-graph bound).

Output is deterministic for a fixed spec: rows are ordered by instance id and
carry no timings, so worker count never changes the bytes.
"""
from __future__ import annotations

import csv
import io as _io
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

from . import generators as gen
from .bounds import bounds_report, kn_formula, line_graph_lower_bound, sandwich_k, spectral_lower_bound
from .errors import PreconditionError, SolverTimeout
from .graph import Graph, line_graph
from .predicates import valid_r_range
from .reductions import subset_level_agreement
from .solvers import (
    independence_number,
    min_dominating,
    min_global_offensive_alliance,
    min_k_dominating,
    min_offensive_alliance,
    min_vertex_cover,
)
from .spectral import laplacian_spectral_radius
from .witnesses import independent_complement_witness, neighborhood_witness, cut_witness

SCHEMA = 1
RANDOM_REGULAR_PARAMS = [(6, 3), (8, 3), (10, 3), (12, 3), (7, 4), (8, 4), (9, 4), (10, 4), (12, 4), (8, 5)]


@dataclass
class CorpusSpec:
    families: list[tuple[str, list[tuple[int, ...]]]] = field(default_factory=list)
    random_regular: int = 30
    r_policy: str | list[int] = "all"
    solver_budget: int = 12
    line_budget: int = 16
    seed: int = 0
    timeout: float = 60.0

    def to_record(self) -> dict:
        rec = asdict(self)
        rec["families"] = [[fam, [list(p) for p in params]] for fam, params in self.families]
        return rec


def default_spec(seed: int = 0, **overrides) -> CorpusSpec:
    families = [
        ("complete", [(n,) for n in range(2, 9)]),
        ("cycle", [(n,) for n in range(3, 11)]),
        ("path", [(n,) for n in range(2, 11)]),
        ("complete_bipartite", [(a, b) for a in range(1, 5) for b in range(a, 9 - a)]),
        ("petersen", [()]),
        ("prism", [(3,), (4,), (5,)]),
        ("hypercube", [(3,)]),
    ]
    spec = CorpusSpec(families=families, seed=seed)
    for key, value in overrides.items():
        setattr(spec, key, value)
    return spec


def _connected_random_regular(n, d, seed):
    attempt = 0
    while True:
        g = gen.random_regular(n, d, seed=seed + 7919 * attempt)
        if g.is_connected():
            return g, seed + 7919 * attempt
        attempt += 1


def instances(spec: CorpusSpec) -> list[tuple[str, str, Graph]]:
    """``(id, family, graph)`` in a fixed order."""
    out = []
    for family, params in spec.families:
        for p in params:
            name = family if not p else f"{family}({','.join(map(str, p))})"
            out.append((name, family, gen.generate(family, *p)))
    for i in range(spec.random_regular):
        n, d = RANDOM_REGULAR_PARAMS[i % len(RANDOM_REGULAR_PARAMS)]
        g, used = _connected_random_regular(n, d, spec.seed * 100_003 + i)
        out.append((f"random_regular({n},{d};seed={used})", "random_regular", g))
    return out


class _Clock:
    def __init__(self, timeout):
        self.deadline = time.monotonic() + timeout

    def left(self):
        left = self.deadline - time.monotonic()
        if left <= 0:
            raise SolverTimeout("instance deadline passed")
        return left


def _r_values(spec, g):
    rr = valid_r_range(g)
    if spec.r_policy == "all":
        return list(rr)
    return [r for r in spec.r_policy if r in rr]


def _witness_size(fn, *args):
    try:
        return len(fn(*args).witness)
    except PreconditionError:
        return None


def analyse(gid: str, family: str, g: Graph, spec: CorpusSpec, backend=None) -> dict:
    """All rows and graph-level checks for one instance."""
    if g.n > spec.solver_budget:
        return {"graph": gid, "skipped": f"n={g.n} over budget {spec.solver_budget}", "rows": [], "checks": {},
                "violations": []}
    clock = _Clock(spec.timeout)
    opts = {"backend": backend}
    connected = g.is_connected()
    mu = laplacian_spectral_radius(g).mu_star if connected and g.n >= 2 else None
    gamma = min_dominating(g, timeout=clock.left(), **opts).optimum
    alpha = independence_number(g, timeout=clock.left(), **opts).optimum
    cover = min_vertex_cover(g, check=False, timeout=clock.left(), **opts).optimum
    kdom_cache: dict[int, int] = {}

    def kdom(k):
        if k not in kdom_cache:
            kdom_cache[k] = min_k_dominating(g, k, timeout=clock.left(), **opts).optimum
        return kdom_cache[k]

    delta, top = g.min_degree, g.max_degree
    rows = []
    for r in _r_values(spec, g):
        a = min_offensive_alliance(g, r, timeout=clock.left(), **opts)
        go = min_global_offensive_alliance(g, r, timeout=clock.left(), **opts)
        k = sandwich_k(g, r)
        rep = bounds_report(
            g, r, exact=go.optimum, mu_star=mu,
            gamma_r=kdom(r) if r >= 1 else None,
            alpha=alpha,
            gamma_k=kdom(k) if k >= 1 else None,
        )
        violations = [f"{e.name}={e.value} vs exact {go.optimum}" for e in rep.violations()]
        violations += [f"{lo} > {up}" for lo, up in rep.inconsistent_pairs()]
        deg_lower = rep.get("degree_lower")
        if deg_lower.applicable and deg_lower.value > a.optimum:
            violations.append(f"degree_lower={deg_lower.value} > a_r={a.optimum}")
        if a.optimum > go.optimum:
            violations.append(f"a_r={a.optimum} > gamma_r^o={go.optimum}")
        if gamma > go.optimum:
            violations.append(f"gamma={gamma} > gamma_r^o={go.optimum}")
        if go.witness and any((g.masks[v] & go.witness.mask).bit_count() * 2 < g.degree(v) + r
                              for v in go.witness.complement()):
            violations.append("optimal witness breaks the per-vertex degree requirement")

        w_nbr = _witness_size(neighborhood_witness, g, r)
        w_cut = None
        if r >= 1:
            h = min_k_dominating(g, r, timeout=clock.left(), **opts).witness
            w_cut = len(cut_witness(g, r, h).witness)
        wic = _witness_size(independent_complement_witness, g, r)
        if w_nbr is not None and w_nbr != rep.get("degree_upper").value:
            violations.append(f"neighborhood witness size {w_nbr} != {rep.get('degree_upper').value}")
        if w_cut is not None and w_cut > (kdom(r) + g.n) // 2:
            violations.append(f"cut witness size {w_cut} over floor((gamma_r+n)/2)")
        printed = rep.get("degree_upper_printed")
        rows.append({
            "graph": gid,
            "n": g.n,
            "m": g.m,
            "delta": delta,
            "max_degree": top,
            "r": r,
            "a_r": a.optimum,
            "gamma_r_o": go.optimum,
            "witness": list(go.witness.members),
            "gamma": gamma,
            "gamma_r": kdom(r) if r >= 1 else None,
            "alpha": alpha,
            "bounds": {e.name: e.value for e in rep.entries},
            "tight": sorted(e.name for e in rep.entries if e.tight),
            "printed_upper_violated": None if not printed.applicable else printed.value < go.optimum,
            "witness_sizes": {"neighborhood": w_nbr, "cut": w_cut, "independent_complement": wic},
            "violations": violations,
        })

    checks, graph_violations = _graph_checks(gid, family, g, rows, cover, alpha, spec, clock, opts)
    return {"graph": gid, "n": g.n, "m": g.m, "mu_star": mu, "rows": rows, "checks": checks,
            "violations": graph_violations}


def _graph_checks(gid, family, g, rows, cover, alpha, spec, clock, opts):
    checks: dict = {}
    bad: list[str] = []
    by_r = {row["r"]: row for row in rows}
    rs = sorted(by_r)
    for r0, r1 in zip(rs, rs[1:]):
        if by_r[r1]["a_r"] < by_r[r0]["a_r"]:
            bad.append(f"a_r decreases from r={r0} to r={r1}")
        if by_r[r1]["gamma_r_o"] < by_r[r0]["gamma_r_o"]:
            bad.append(f"gamma_r^o decreases from r={r0} to r={r1}")
        s0, s1 = by_r[r0]["bounds"].get("spectral_lower"), by_r[r1]["bounds"].get("spectral_lower")
        if s0 is not None and s1 is not None and s1 < s0:
            bad.append(f"spectral bound decreases from r={r0} to r={r1}")
    if cover != g.n - alpha:
        bad.append(f"vertex cover {cover} != n - alpha")

    degs = g.degree_sequence()
    if rows and g.m and degs.all_even():
        pairs = [(r, r + 1) for r in rs if r % 2 == 1 and r + 1 in by_r]
        checks["parity_even"] = len(pairs)
        for r0, r1 in pairs:
            for key in ("a_r", "gamma_r_o"):
                if by_r[r0][key] != by_r[r1][key]:
                    bad.append(f"even degrees but {key}({r0}) != {key}({r1})")
    if rows and g.m and degs.all_odd():
        pairs = [(r, r + 1) for r in rs if r % 2 == 0 and r + 1 in by_r]
        checks["parity_odd"] = len(pairs)
        for r0, r1 in pairs:
            for key in ("a_r", "gamma_r_o"):
                if by_r[r0][key] != by_r[r1][key]:
                    bad.append(f"odd degrees but {key}({r0}) != {key}({r1})")

    if family == "complete" or (g.n >= 2 and 2 * g.m == g.n * (g.n - 1)):
        for r, row in by_r.items():
            f = kn_formula(g.n, r)
            if row["a_r"] != f or row["gamma_r_o"] != f:
                bad.append(f"K_n formula {f} vs a_r={row['a_r']}, gamma_r^o={row['gamma_r_o']} at r={r}")
        checks["complete_formula"] = len(by_r)

    if g.is_regular() and g.min_degree == 3 and g.is_connected() and 2 in by_r:
        agree = subset_level_agreement(g, 2)
        checks["cubic_cover_equivalence"] = {"vertex_cover": cover, "a_2": by_r[2]["a_r"], "subsets_agree": agree}
        if not agree or cover != by_r[2]["a_r"]:
            bad.append("cubic graph: vertex covers and 2-alliances differ")

    if g.is_regular() and g.min_degree >= 2 and g.is_connected() and g.m <= spec.line_budget:
        lg = line_graph(g)
        mu_l = laplacian_spectral_radius(lg).mu_star
        entries = []
        for r in (1, 2):
            if r not in valid_r_range(lg):
                continue
            bound = line_graph_lower_bound(g, r)
            exact = min_global_offensive_alliance(lg, r, timeout=clock.left(), **opts).optimum
            spec_bound = spectral_lower_bound(lg, r, mu_l)
            entries.append({"r": r, "bound": bound, "exact": exact, "spectral": spec_bound})
            if bound > exact:
                bad.append(f"line graph bound {bound} > exact {exact} at r={r}")
        two_delta = 2 * g.min_degree
        checks["line_graph"] = {
            "order": lg.n,
            "mu_star": mu_l,
            "equals_2delta": abs(mu_l - two_delta) <= 1e-8 * two_delta,
            "rows": entries,
        }
        if mu_l > two_delta * (1 + 1e-8):
            bad.append(f"line graph radius {mu_l} exceeds 2*delta")
    return checks, [f"{gid}: {b}" for b in bad]


def summarize(results: list[dict]) -> tuple[list[dict], dict]:
    """Flatten per-graph results into rows plus the corpus summary."""
    rows = [row for res in results for row in res["rows"]]
    violations = [v for res in results for v in res["violations"]]
    violations += [f"{row['graph']} r={row['r']}: {v}" for row in rows for v in row["violations"]]
    printed = [(row["graph"], row["r"]) for row in rows if row["printed_upper_violated"]]
    odd_only = all((row["delta"] + row["r"]) % 2 == 1 for row in rows if row["printed_upper_violated"])
    if not odd_only:
        violations.append("printed degree ceiling failed on a row with delta + r even")
    k5_present = any(row["graph"] == "complete(5)" and row["r"] == 1 for row in rows)
    k5_detected = ("complete(5)", 1) in printed
    if k5_present and not k5_detected:
        violations.append("printed degree ceiling not caught on complete(5), r=1")
    tight_counts: dict[str, int] = {}
    for row in rows:
        for name in row["tight"]:
            tight_counts[name] = tight_counts.get(name, 0) + 1
    summary = {
        "instances": len(results),
        "skipped": [res["graph"] for res in results if res.get("skipped")],
        "rows": len(rows),
        "violations": violations,
        "printed_upper_violations": [list(p) for p in printed],
        "printed_violations_all_odd": odd_only,
        "k5_r1_printed_violation_detected": k5_detected,
        "tight_counts": dict(sorted(tight_counts.items())),
    }
    return rows, summary


def run_corpus(spec: CorpusSpec, workers: int = 1, backend=None) -> dict:
    insts = instances(spec)

    def one(item):
        gid, family, g = item
        try:
            return analyse(gid, family, g, spec, backend)
        except SolverTimeout:
            return {"graph": gid, "skipped": "timeout", "rows": [], "checks": {}, "violations": []}

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(one, insts))
    else:
        results = [one(item) for item in insts]

    rows, summary = summarize(results)
    graphs = [{k: v for k, v in res.items() if k != "rows"} for res in results]
    return {"schema": SCHEMA, "spec": spec.to_record(), "graphs": graphs, "rows": rows, "summary": summary}


def to_json(result: dict) -> str:
    return json.dumps(result, sort_keys=True, indent=1) + "\n"


TABLE_BOUNDS = ("degree_lower", "spectral_lower", "sandwich_lower", "degree_upper", "degree_upper_printed",
                "kdom_upper", "cockayne_upper", "sandwich_upper")


def to_table(result: dict) -> str:
    head = ["graph", "r", "n", "delta", "a_r", "gamma_r_o", *TABLE_BOUNDS, "neighborhood", "cut", "viol"]
    body = []
    for row in result["rows"]:
        cells = [row["graph"], row["r"], row["n"], row["delta"], row["a_r"], row["gamma_r_o"]]
        cells += [row["bounds"].get(b) for b in TABLE_BOUNDS]
        cells += [row["witness_sizes"]["neighborhood"], row["witness_sizes"]["cut"], len(row["violations"])]
        body.append(["-" if c is None else str(c) for c in cells])
    widths = [max(len(x) for x in col) for col in zip(head, *body)]
    lines = ["  ".join(c.rjust(w) if i else c.ljust(w) for i, (c, w) in enumerate(zip(r, widths))) for r in [head, *body]]
    s = result["summary"]
    lines.append("")
    lines.append(f"{s['instances']} instances, {s['rows']} rows, {len(s['skipped'])} skipped, "
                 f"{len(s['violations'])} violations; printed ceiling violated on "
                 f"{len(s['printed_upper_violations'])} rows (all delta+r odd: {s['printed_violations_all_odd']})")
    lines += [f"VIOLATION {v}" for v in s["violations"]]
    return "\n".join(lines) + "\n"


def to_csv(result: dict) -> str:
    buf = _io.StringIO()
    head = ["graph", "r", "n", "m", "delta", "a_r", "gamma_r_o", "gamma", "gamma_r", "alpha", *TABLE_BOUNDS,
            "neighborhood", "cut", "independent_complement", "violations"]
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(head)
    for row in result["rows"]:
        w.writerow([row["graph"], row["r"], row["n"], row["m"], row["delta"], row["a_r"], row["gamma_r_o"],
                    row["gamma"], row["gamma_r"], row["alpha"], *[row["bounds"].get(b) for b in TABLE_BOUNDS],
                    row["witness_sizes"]["neighborhood"], row["witness_sizes"]["cut"],
                    row["witness_sizes"]["independent_complement"], "; ".join(row["violations"])])
    return buf.getvalue()
