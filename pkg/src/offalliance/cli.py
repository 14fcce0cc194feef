"""Command-line entry point.

Exit status: 0 on success, 1 when a checked property fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus, generators
from .bounds import bounds_report, sandwich_k
from .errors import GraphFormatError, GuardrailError, InvalidParameterError, PreconditionError, SolverTimeout
from .graph import VertexSet, line_graph
from .io import read_graph, serialize
from .predicates import is_global_offensive_r_alliance, is_offensive_r_alliance, valid_r_range
from .reductions import DEFAULT_BUDGET, build, verify_gadget
from .solvers import (
    independence_number,
    min_global_offensive_alliance,
    min_k_dominating,
    min_offensive_alliance,
    min_vertex_cover,
)
from .witnesses import independent_complement_witness, neighborhood_witness, cut_witness

SCHEMA = 1


class UsageError(Exception):
    pass


def _emit(payload) -> None:
    if isinstance(payload, str):
        sys.stdout.write(payload)
    else:
        sys.stdout.write(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True, indent=2) + "\n")


def _r_list(spec: str, g) -> list[int]:
    if spec == "all":
        return list(valid_r_range(g))
    try:
        return [int(x) for x in spec.split(",")]
    except ValueError:
        raise UsageError(f"-r expects an integer, a comma list, or 'all'; got {spec!r}") from None


def _solver_opts(args) -> dict:
    return {"workers": args.workers, "allow_large": args.allow_large, "timeout": args.timeout,
            "backend": args.backend}


def cmd_gen(args) -> int:
    g = generators.generate(args.family, *args.params, seed=args.seed)
    _emit(serialize(g, args.graph_format))
    return 0


def cmd_verify(args) -> int:
    g = read_graph(args.graph, args.input_format)
    if args.set is not None:
        rs = _r_list(args.r, g)
        if len(rs) != 1:
            raise UsageError("--set needs a single -r value")
        try:
            members = [int(x) for x in args.set.split(",") if x.strip()]
        except ValueError:
            raise UsageError(f"--set expects comma-separated vertex indices; got {args.set!r}") from None
        if any(not 0 <= v < g.n for v in members):
            raise UsageError(f"--set has a vertex outside 0..{g.n - 1}")
        s = VertexSet.of(g.n, members)
        check = is_global_offensive_r_alliance if args.global_ else is_offensive_r_alliance
        rep = check(g, s, rs[0])
        if args.format == "table":
            state = "holds" if rep.holds else "fails"
            lines = [f"{'global ' if args.global_ else ''}offensive {rep.r}-alliance {list(s.members)}: {state}"]
            lines += [f"  vertex {v}: margin {m}" for v, m in sorted(rep.margins.items())]
            _emit("\n".join(lines) + "\n")
        else:
            _emit(rep.to_record())
        return 0 if rep.holds else 1
    spec = corpus.CorpusSpec(r_policy="all" if args.r == "all" else _r_list(args.r, g),
                             solver_budget=args.budget, timeout=args.timeout or 60.0)
    result = corpus.analyse(Path(args.graph).name, "", g, spec, args.backend)
    rows, summary = corpus.summarize([result])
    if args.format == "table":
        _emit(corpus.to_table({"rows": rows, "summary": summary}))
    else:
        _emit({**result, "summary": summary})
    return 1 if summary["violations"] else 0


def cmd_solve(args) -> int:
    g = read_graph(args.graph, args.input_format)
    opts = _solver_opts(args)
    if args.problem == "alliance":
        fn = min_global_offensive_alliance if args.global_ else min_offensive_alliance
        results = [fn(g, r, **opts) for r in _r_list(args.r, g)]
    elif args.problem == "dominating":
        results = [min_k_dominating(g, args.k, **opts)]
    elif args.problem == "vertex-cover":
        results = [min_vertex_cover(g, **opts)]
    else:
        results = [independence_number(g, **opts)]
    if args.format == "table":
        lines = [f"{res.problem:<26} r={res.param!s:<4} optimum={res.optimum:<4} witness={list(res.witness.members)}"
                 for res in results]
        _emit("\n".join(lines) + "\n")
    elif len(results) == 1:
        _emit(results[0].to_record())
    else:
        _emit({"results": [res.to_record() for res in results]})
    return 0


def _bounds_for(g, r, exact: bool, opts, line_of=None):
    known = {}
    if exact:
        known["exact"] = min_global_offensive_alliance(g, r, **opts).optimum
        if r >= 1:
            known["gamma_r"] = min_k_dominating(g, r, **opts).optimum
        known["alpha"] = independence_number(g, **opts).optimum
        k = sandwich_k(g, r)
        if k >= 1:
            known["gamma_k"] = min_k_dominating(g, k, **opts).optimum
    return bounds_report(g, r, line_graph_of=line_of, **known)


def cmd_bounds(args) -> int:
    g = read_graph(args.graph, args.input_format)
    line_of = None
    if args.line_graph:
        line_of, g = g, line_graph(g)
    exact = not args.no_exact and g.n <= args.budget
    opts = _solver_opts(args)
    reports = [_bounds_for(g, r, exact, opts, line_of) for r in _r_list(args.r, g)]
    if args.format == "json":
        _emit({"bounds": [rep.to_record() for rep in reports]})
    else:
        _emit("\n".join(rep.to_table() for rep in reports))
    return 1 if any(rep.violations() for rep in reports) else 0


def cmd_witness(args) -> int:
    g = read_graph(args.graph, args.input_format)
    out = []
    for r in _r_list(args.r, g):
        chosen = ["neighborhood", "cut", "independent"] if args.construction == "all" else [args.construction]
        for name in chosen:
            try:
                if name == "neighborhood":
                    cert = neighborhood_witness(g, r)
                elif name == "cut":
                    h = min_k_dominating(g, r, **_solver_opts(args)).witness if r >= 1 else None
                    if h is None:
                        raise PreconditionError("needs r >= 1")
                    cert = cut_witness(g, r, h)
                else:
                    cert = independent_complement_witness(g, r)
            except PreconditionError as exc:
                if args.construction != "all":
                    raise
                out.append({"construction": name, "r": r, "skipped": str(exc)})
                continue
            out.append({"r": r, **cert.to_record()})
    if args.format == "table":
        lines = [f"r={c['r']:<3} {c['construction']:<22} " +
                 (f"skipped: {c['skipped']}" if "skipped" in c else
                  f"size={c['size']} bound={c['claimed_bound']} witness={c['witness']}") for c in out]
        _emit("\n".join(lines) + "\n")
    else:
        _emit({"witnesses": out})
    return 0


def cmd_reduce(args) -> int:
    g = read_graph(args.graph, args.input_format)
    art = build(args.kind, g, args.r, budget=args.budget)
    check = verify_gadget(art, **_solver_opts(args)) if args.verify else None
    if args.out:
        Path(f"{args.out}.txt").write_text(art.to_edge_list())
        Path(f"{args.out}.labels.json").write_text(art.sidecar_json() + "\n")
    if args.format == "json":
        payload = {"kind": art.kind, "r": art.r, "target_r": art.target_r, "order": art.gprime.n,
                   "edges": art.gprime.m, "size_map": {"scale": art.size_scale, "offset": art.size_offset},
                   "edgelist": art.to_edge_list(), "labels": art.label_map()}
        if check is not None:
            payload["verification"] = check.to_record()
        _emit(payload)
    elif not args.out:
        _emit(art.to_edge_list())
        sys.stderr.write(art.sidecar_json() + "\n")
    if check is not None and args.format != "json":
        sys.stderr.write(json.dumps(check.to_record(), sort_keys=True) + "\n")
    return 1 if check is not None and not check.holds else 0


def cmd_bench(args) -> int:
    spec = corpus.default_spec(seed=args.seed, solver_budget=args.budget, timeout=args.timeout or 60.0,
                               random_regular=args.random)
    if args.r != "all":
        try:
            spec.r_policy = [int(x) for x in args.r.split(",")]
        except ValueError:
            raise UsageError("-r expects 'all' or a comma list of integers") from None
    result = corpus.run_corpus(spec, workers=args.workers, backend=args.backend)
    render = {"json": corpus.to_json, "table": corpus.to_table, "csv": corpus.to_csv}[args.format]
    text = render(result)
    if args.out:
        Path(args.out).write_text(text)
    else:
        _emit(text)
    return 1 if result["summary"]["violations"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="offalliance", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_, default_format="json"):
        p = sub.add_parser(name, help=help_)
        p.add_argument("graph", help="edge-list or DIMACS file, '-' for stdin")
        p.add_argument("--input-format", choices=("auto", "edgelist", "dimacs"), default="auto")
        p.add_argument("--format", choices=("json", "table"), default=default_format)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--timeout", type=float, default=None, help="seconds per solve")
        p.add_argument("--allow-large", action="store_true", help="lift the exact-search size guardrail")
        p.add_argument("--backend", choices=("numba", "numpy"), default=None)
        return p

    p = sub.add_parser("gen", help="print a generated graph")
    p.add_argument("family", choices=generators.FAMILIES)
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--graph-format", choices=("edgelist", "dimacs"), default="edgelist")
    p.set_defaults(func=cmd_gen)

    p = graph_cmd("verify", "check a set, or every bound and law on one graph")
    p.add_argument("-r", default="all")
    p.add_argument("--set", help="comma-separated vertices to test as an alliance")
    p.add_argument("--global", dest="global_", action="store_true")
    p.add_argument("--budget", type=int, default=16, help="largest n solved exactly")
    p.set_defaults(func=cmd_verify)

    p = graph_cmd("solve", "exact minimum alliances, dominating sets, covers")
    p.add_argument("-r", default="1")
    p.add_argument("--global", dest="global_", action="store_true")
    p.add_argument("--problem", choices=("alliance", "dominating", "vertex-cover", "independence"),
                   default="alliance")
    p.add_argument("-k", type=int, default=1, help="domination multiplicity for --problem dominating")
    p.set_defaults(func=cmd_solve)

    p = graph_cmd("bounds", "every bound on the global offensive r-alliance number", "table")
    p.add_argument("-r", default="1")
    p.add_argument("--no-exact", action="store_true", help="skip exact solves (no tightness column)")
    p.add_argument("--budget", type=int, default=24, help="largest n solved exactly")
    p.add_argument("--line-graph", action="store_true", help="report on L(G), adding the line-graph bound")
    p.set_defaults(func=cmd_bounds)

    p = graph_cmd("witness", "constructive global offensive alliances")
    p.add_argument("-r", default="1")
    p.add_argument("--construction", choices=("neighborhood", "cut", "independent", "all"), default="all")
    p.set_defaults(func=cmd_witness)

    p = graph_cmd("reduce", "build a hardness gadget (edge list on stdout, labels on stderr)", "table")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--kind", choices=("downshift", "goa-low", "goa-high"), required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum gadget order")
    p.add_argument("--out", help="write PREFIX.txt and PREFIX.labels.json")
    p.add_argument("--verify", action="store_true", help="solve both sides and compare sizes")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("bench", help="run the default corpus")
    p.add_argument("-r", default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=12, help="largest n solved exactly")
    p.add_argument("--random", type=int, default=30, help="number of random regular instances")
    p.add_argument("--timeout", type=float, default=60.0, help="seconds per instance")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("json", "table", "csv"), default="table")
    p.add_argument("--backend", choices=("numba", "numpy"), default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, InvalidParameterError, PreconditionError, GuardrailError, UsageError,
            FileNotFoundError, SolverTimeout) as exc:
        print(f"offalliance {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
