"""Command-line interface: ``vfolkman <verb> ...``.

Exit status: 0 success, 1 a checked property does not hold (``--expect``),
2 usage error, 3 node budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import constructions as C
from .arrowing import (
    ArrowSpec, ClauseCapExceeded, encode_free_coloring_cnf, find_free_coloring, in_Hv,
)
from .claims import REGISTRY, SCHEMA, UnknownClaim, verify_claim
from .folkman import (
    NonexistenceError, SearchBudget, VerificationFailed, extremal_graphs, folkman_lower_bound,
    folkman_upper_bound, verify_ramsey,
)
from .graph import (
    Graph, canonical_form, circulant, complete, cycle, read_graph6_lines, to_graph6,
)
from .invariants import Budget, BudgetExhausted, invariants, is_vertex_critical

BUDGET_ENV = "VFOLKMAN_NODE_BUDGET"

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _doc(**fields) -> dict:
    return {"schema": SCHEMA, **fields}


def _read_graphs(src: str) -> list[Graph]:
    """``--graph6`` value: ``-`` for stdin, an existing file, or a literal graph6 string."""
    if src == "-":
        lines = sys.stdin.read().splitlines()
    elif Path(src).is_file():
        lines = Path(src).read_text().splitlines()
    else:
        lines = [src]
    graphs = list(read_graph6_lines(lines))
    if not graphs:
        raise UsageError("no graph6 input")
    return graphs


def _spec(text: str) -> ArrowSpec:
    try:
        return ArrowSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _bool(text: str) -> bool:
    if text.lower() in ("true", "1", "yes"):
        return True
    if text.lower() in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError("expected true or false")


def _node_budget(args) -> int | None:
    if args.node_budget is not None:
        return args.node_budget
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{BUDGET_ENV} must be an integer") from None
    return None


def _search_budget(args, **kw) -> SearchBudget:
    return SearchBudget(node_budget=_node_budget(args), workers=args.workers, **kw)


# --- verbs ------------------------------------------------------------------

CONSTRUCTIONS = ("P", "Q", "p_tilde", "q_tilde", "dirac", "lru", "thm14", "triple_c5",
                 "grotzsch", "mycielski", "k4free_chi5", "ramsey", "complete", "cycle", "circulant")


def _construct(args) -> tuple[Graph, dict]:
    name = args.name

    def need(*attrs):
        missing = [a for a in attrs if getattr(args, a) is None]
        if missing:
            raise UsageError(f"construct {name} needs " + ", ".join("--" + m for m in missing))

    if name == "P":
        return C.graph_P(), {"n": 13, "alpha": 2, "omega": 4, "chi": 7}
    if name == "Q":
        return C.graph_Q(), {"n": 17, "alpha": 2, "omega": 5, "chi_min": 9}
    if name in ("p_tilde", "q_tilde"):
        need("r", "s")
        inst = (C.p_tilde if name == "p_tilde" else C.q_tilde)(args.r, args.s)
        exp = {"n": inst.n, "omega": inst.omega,
               ("chi" if inst.chi_exact else "chi_min"): inst.chi}
        return inst.graph, exp
    if name == "dirac":
        need("r")
        return C.dirac_extremal(args.r), {"n": args.r + 3, "chi": args.r + 1, "omega": args.r}
    if name == "lru":
        need("spec")
        sp = args.spec
        return C.lru_extremal(sp), {"n": sp.m + sp.p}
    if name == "thm14":
        need("r")
        return C.thm14_extremal(args.r), {"n": args.r + 5, "chi": args.r + 1, "omega": args.r - 1}
    if name == "triple_c5":
        return C.triple_c5(), {"n": 15, "chi": 9, "omega": 6}
    if name == "grotzsch":
        return C.mycielski(cycle(5)), {"n": 11, "chi": 4, "omega": 2}
    if name == "mycielski":
        need("graph6")
        g = _read_graphs(args.graph6)[0]
        return C.mycielski(g), {"n": 2 * g.n + 1}
    if name == "k4free_chi5":
        return C.k4_free_five_chromatic(), {"n": 11, "chi": 5, "omega": 3}
    if name == "ramsey":
        need("p", "q")
        g = C.ramsey_witness(args.p, args.q)
        return g, {"n": g.n, "omega_max": args.p - 1, "alpha_max": args.q - 1}
    if name == "complete":
        need("n")
        return complete(args.n), {"n": args.n}
    if name == "cycle":
        need("n")
        return cycle(args.n), {"n": args.n}
    need("n", "S")
    return circulant(args.n, args.S), {"n": args.n}


def cmd_construct(args, out) -> int:
    g, expected = _construct(args)
    if args.format == "graph6":
        out.write(to_graph6(g) + "\n")
        return EXIT_OK
    rep = invariants(g, _node_budget(args)).as_dict()
    ok = True
    for key, want in expected.items():
        if key.endswith("_min"):
            ok &= rep[key[:-4]] >= want
        elif key.endswith("_max"):
            ok &= rep[key[:-4]] <= want
        else:
            ok &= rep[key] == want
    _emit(_doc(name=args.name, graph6=to_graph6(g), expected=expected, actual=rep, ok=bool(ok)), out)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_invariants(args, out) -> int:
    budget = _node_budget(args)
    docs = []
    for g in _read_graphs(args.graph6):
        rep = invariants(g, budget).as_dict()
        if args.critical and g.n:
            rep["vertex_critical"] = is_vertex_critical(g, budget)
        docs.append({"graph6": to_graph6(g), **rep})
    _emit(_doc(results=docs), out)
    return EXIT_OK


def _decide(args, out, verb: str) -> int:
    budget = Budget(_node_budget(args))
    docs, mismatch = [], False
    for g in _read_graphs(args.graph6):
        if verb == "arrows":
            col = find_free_coloring(g, args.spec, budget, method=args.method)
            value = col is None
            doc = {"graph6": to_graph6(g), "spec": str(args.spec), "arrows": value,
                   "coloring": None if col is None else list(col.assignment)}
        else:
            value = in_Hv(g, args.spec, args.q, budget, method=args.method)
            doc = {"graph6": to_graph6(g), "spec": str(args.spec), "q": args.q, "in_Hv": value}
        if args.expect is not None and value != args.expect:
            mismatch = True
        docs.append((g, value, doc))
    if args.format == "graph6":
        for g, value, _ in docs:
            if value:
                out.write(to_graph6(g) + "\n")
    else:
        _emit(_doc(results=[d for _, _, d in docs]), out)
    return EXIT_FALSE if mismatch else EXIT_OK


def cmd_arrows(args, out) -> int:
    return _decide(args, out, "arrows")


def cmd_hv(args, out) -> int:
    return _decide(args, out, "hv")


def cmd_bound(args, out) -> int:
    if args.kind == "lower":
        if args.n_max is None:
            raise UsageError("bound lower needs --n-max")
        sb = _search_budget(args, max_vertices=min(64, max(args.n_max, 1)),
                            external_source=args.external, attested=args.attested)
        res = folkman_lower_bound(args.spec, args.q, args.n_max, sb, prune=not args.no_prune)
        _emit(_doc(**res.as_dict()), out)
        return EXIT_BUDGET if "budget" in res.evidence else EXIT_OK
    if args.kind == "upper":
        if args.graph6 is None:
            raise UsageError("bound upper needs --graph6")
        g = _read_graphs(args.graph6)[0]
        try:
            res = folkman_upper_bound(g, args.spec, args.q, _node_budget(args))
        except VerificationFailed as exc:
            _emit(_doc(target=f"F_v({args.spec};{args.q})", kind="upper", error=str(exc)), out)
            return EXIT_FALSE
        _emit(_doc(**res.as_dict()), out)
        return EXIT_OK
    if args.n is None:
        raise UsageError("bound extremal needs --n")
    graphs = extremal_graphs(args.spec, args.q, args.n, assume_minimum=args.assume_minimum,
                             budget=_search_budget(args))
    if args.format == "graph6":
        out.writelines(to_graph6(g) + "\n" for g in graphs)
    else:
        _emit(_doc(target=f"F_v({args.spec};{args.q})", n=args.n, count=len(graphs),
                   assume_minimum=args.assume_minimum, graphs=[to_graph6(g) for g in graphs]), out)
    return EXIT_OK


def cmd_claims(args, out) -> int:
    if args.action == "list":
        _emit(_doc(claims=[{"id": c.id, "statement": c.statement} for c in REGISTRY.values()]), out)
        return EXIT_OK
    ids = list(REGISTRY) if args.ids == ["all"] else args.ids
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        raise UsageError(f"unknown claim id(s): {', '.join(unknown)}")
    sb = _search_budget(args, max_vertices=args.max_vertices,
                        external_source=args.external, attested=args.attested)
    opts = {"max_r": args.max_r, "n_max": args.n_max, "extended": args.extended or None}
    status = EXIT_OK
    records = []
    for cid in ids:
        rec = verify_claim(cid, sb, **opts)
        records.append(rec.as_dict(runtime=not args.no_runtime))
        if rec.budget_exhausted:
            status = max(status, EXIT_BUDGET)
        elif rec.verdict == "refuted" or (args.expect and rec.verdict != args.expect):
            status = max(status, EXIT_FALSE)
    if len(records) == 1:
        _emit(records[0], out)
    else:
        _emit(_doc(records=records), out)
    return status


def cmd_ramsey(args, out) -> int:
    res = verify_ramsey(args.p, args.q, args.scale, _search_budget(args))
    _emit(_doc(**res.as_dict()), out)
    if not res.complete:
        return EXIT_BUDGET
    if args.expect is not None and res.value != args.expect:
        return EXIT_FALSE
    return EXIT_OK


def cmd_encode(args, out) -> int:
    graphs = _read_graphs(args.graph6)
    if len(graphs) != 1:
        raise UsageError("encode takes exactly one graph")
    try:
        out.write(encode_free_coloring_cnf(graphs[0], args.spec, args.max_clauses))
    except ClauseCapExceeded as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_canon(args, out) -> int:
    graphs = _read_graphs(args.graph6)
    if args.format == "graph6":
        out.writelines(to_graph6(canonical_form(g)) + "\n" for g in graphs)
    else:
        _emit(_doc(results=[{"graph6": to_graph6(g), "canonical": to_graph6(canonical_form(g))}
                            for g in graphs]), out)
    return EXIT_OK


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vfolkman", description="Vertex Folkman number toolkit.")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, fn, formats, help_):
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--node-budget", type=int, default=None,
                        help=f"node cap for searches (default: ${BUDGET_ENV}, else unlimited)")
        sp.add_argument("--workers", type=int, default=os.cpu_count() or 1)
        return sp

    def g6(sp, required=True):
        sp.add_argument("--graph6", required=required,
                        help="graph6 string, file of graph6 lines, or - for stdin")

    sp = verb("construct", cmd_construct, ["json", "graph6"], "build a named graph or family member")
    sp.add_argument("name", choices=CONSTRUCTIONS)
    sp.add_argument("--r", type=int)
    sp.add_argument("--s", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--spec", type=_spec)
    sp.add_argument("--S", type=lambda t: [int(x) for x in t.split(",")])
    g6(sp, required=False)

    sp = verb("invariants", cmd_invariants, ["json"], "clique, independence and chromatic numbers")
    g6(sp)
    sp.add_argument("--critical", action="store_true", help="also test vertex-criticality")

    for name, fn, help_ in (("arrows", cmd_arrows, "decide G -> (a_1,...,a_r)"),
                            ("hv", cmd_hv, "decide membership in H_v(a_1,...,a_r;q)")):
        sp = verb(name, fn, ["json", "graph6"], help_)
        g6(sp)
        sp.add_argument("--spec", type=_spec, required=True, help="thresholds, e.g. 2,2,2")
        if name == "hv":
            sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--method", choices=["auto", "search", "chromatic"], default="auto")
        sp.add_argument("--expect", type=_bool)

    sp = verb("bound", cmd_bound, ["json", "graph6"], "lower/upper bounds and extremal graphs")
    sp.add_argument("kind", choices=["lower", "upper", "extremal"])
    sp.add_argument("--spec", type=_spec, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--no-prune", action="store_true")
    sp.add_argument("--assume-minimum", action="store_true")
    sp.add_argument("--external", help="graph6 file or - supplying graphs beyond the generator")
    sp.add_argument("--attested", action="store_true", help="the external stream is complete")
    g6(sp, required=False)

    sp = verb("claims", cmd_claims, ["json"], "list or verify registered claims")
    sp.add_argument("action", choices=["list", "verify"])
    sp.add_argument("ids", nargs="*", default=[])
    sp.add_argument("--max-r", type=int)
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--max-vertices", type=int, default=13)
    sp.add_argument("--extended", action="store_true")
    sp.add_argument("--external")
    sp.add_argument("--attested", action="store_true")
    sp.add_argument("--expect", choices=["verified", "partially-verified", "witness-only", "refuted"])
    sp.add_argument("--no-runtime", action="store_true", help="omit the runtime field")

    sp = verb("ramsey", cmd_ramsey, ["json"], "check a small Ramsey number")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--scale", type=int, default=9, help="largest order enumerated for the upper side")
    sp.add_argument("--expect", type=int)

    sp = verb("encode", cmd_encode, ["dimacs"], "free-colouring instance as DIMACS CNF")
    g6(sp)
    sp.add_argument("--spec", type=_spec, required=True)
    sp.add_argument("--max-clauses", type=int, default=1_000_000)

    sp = verb("canon", cmd_canon, ["graph6", "json"], "canonical form")
    g6(sp)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.verb == "claims" and args.action == "verify" and not args.ids:
        print("vfolkman claims verify: give claim ids or 'all'", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "workers", 1) < 1:
        print("vfolkman: --workers must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except BudgetExhausted as exc:
        print(f"vfolkman: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, UnknownClaim, NonexistenceError, ValueError) as exc:
        print(f"vfolkman {args.verb}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
