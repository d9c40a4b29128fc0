"""Command line interface.

Exit codes: 0 success; 1 verification failures present; 2 bad input;
3 budget exhausted where a point answer was demanded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classifier import classify
from .errors import BudgetExhausted, PisError
from .harness import FamilyConfig, verify
from .patterns import find_induced, find_subdivision, is_cactus, is_cograph, is_split, is_threshold, is_unicyclic, verify_witness
from .pis_graph import build_pis, export_dot, graph_stats, parse_edge_list
from .ring_model import load_ring, shape_summary
from .surface import (
    crosscap_of,
    euler_lower_bounds,
    formula_crosscap_bipartite,
    formula_crosscap_complete,
    formula_genus_bipartite,
    formula_genus_complete,
    genus_of,
    verify_certificate,
)
from .surface.search import crosscap_exact, genus_exact


def _load_graph(args) -> tuple:
    """(graph, ring-or-None) from either a ring spec or an edge list file."""
    if getattr(args, "graph", None):
        with open(args.graph, "r", encoding="utf-8") as fh:
            return parse_edge_list(fh.read()), None
    ring = load_ring(args.spec)
    return build_pis(ring), ring


def _cmd_build(args) -> int:
    ring = load_ring(args.spec)
    g = build_pis(ring)
    stats = graph_stats(g)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(export_dot(g))
    payload = {"ring": ring.name, **stats.to_json()}
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"{ring.name}: v={stats.vertices} e={stats.edges} girth={stats.girth} components={stats.components}")
    return 0


def _cmd_classify(args) -> int:
    ring = load_ring(args.spec)
    profile = classify(shape_summary(ring))
    if args.json:
        print(json.dumps({"ring": ring.name, "profile": profile.to_json()}, sort_keys=True))
    else:
        print(f"{ring.name}: {profile.to_json()}")
    return 0


def _cmd_invariants(args) -> int:
    g, ring = _load_graph(args)
    split_ok, witness = is_split(g)
    glb, clb = (0, 0) if g.edge_count == 0 else euler_lower_bounds(g)
    payload = {
        "split": split_ok,
        "threshold": is_threshold(g),
        "cograph": is_cograph(g),
        "cactus": is_cactus(g),
        "unicyclic": is_unicyclic(g),
        "euler_lower_bounds": {"genus": glb, "crosscap": clb},
    }
    if witness is not None:
        payload["split_witness"] = witness.to_json(g)
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for k, v in payload.items():
            print(f"{k}: {v}")
    return 0


def _surface_cmd(args, invariant: str) -> int:
    g, _ring = _load_graph(args)
    compute = genus_of if invariant == "genus" else crosscap_of
    if not g.is_connected:
        if invariant == "crosscap":
            print("crosscap of a disconnected graph is out of scope", file=sys.stderr)
            return 2
        total = 0
        exact = True
        for comp in g.components():
            c = genus_of(g.subgraph(comp), args.budget)
            total += c.lo
            exact = exact and c.exact
        print(json.dumps({"invariant": "genus", "per_component_sum": total, "exact": exact}))
        return 0 if exact else 3
    cert = compute(g, args.budget)
    ok, problems = verify_certificate(g, cert)
    out = {"certificate": cert.to_json(), "verified": ok}
    if problems:
        out["problems"] = problems
    print(json.dumps(out, sort_keys=True))
    if not ok:
        return 1
    if not cert.exact:
        return 3
    return 0


def _cmd_formulas(args) -> int:
    failures = 0
    from .pis_graph import complete_bipartite, complete_graph

    rows = []
    for n in range(3, args.max_n + 1):
        want = formula_genus_complete(n)
        cert = genus_exact(complete_graph(n), args.budget)
        rows.append(("genus", f"K{n}", want, cert))
    for m in range(2, args.max_mn + 1):
        for n in range(m, args.max_mn + 1):
            want = formula_genus_bipartite(m, n)
            cert = genus_exact(complete_bipartite(m, n), args.budget)
            rows.append(("genus", f"K{m},{n}", want, cert))
    for n in range(3, args.max_n + 1):
        want = formula_crosscap_complete(n)
        cert = crosscap_exact(complete_graph(n), args.budget)
        rows.append(("crosscap", f"K{n}", want, cert))
    for m in range(2, args.max_mn + 1):
        for n in range(m, args.max_mn + 1):
            want = formula_crosscap_bipartite(m, n)
            cert = crosscap_exact(complete_bipartite(m, n), args.budget)
            rows.append(("crosscap", f"K{m},{n}", want, cert))
    for invariant, name, want, cert in rows:
        if cert.exact:
            got = str(cert.value)
            status = "ok" if cert.value == want else "MISMATCH"
            if cert.value != want:
                failures += 1
        else:
            got = f"[{cert.lo},{cert.hi}]"
            inside = cert.lo <= want and (cert.hi is None or want <= cert.hi)
            status = "inconclusive" if inside else "MISMATCH"
            if not inside:
                failures += 1
        print(f"{invariant:9} {name:7} formula={want:<3} search={got:<8} {status}")
    return 1 if failures else 0


def _cmd_verify(args) -> int:
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            cfg = FamilyConfig.from_json(json.load(fh))
    else:
        cfg = FamilyConfig()
    report = verify(cfg, ledger_path=args.ledger)
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        print(report.summary_table())
    return 1 if report.failures else 0


def _cmd_find(args) -> int:
    g, _ring = _load_graph(args)
    hints = None
    if args.hints:
        hints = [int(tok) for tok in args.hints.split(",") if tok.strip() != ""]
    induced = {"P4", "C4", "C5", "2K2"}
    try:
        if args.pattern in induced:
            w = find_induced(g, args.pattern)
        else:
            w = find_subdivision(g, args.pattern, hints=hints, budget=args.budget)
    except BudgetExhausted as exc:
        print(json.dumps({"witness": None, "status": "budget_exhausted", "detail": str(exc)}))
        return 3
    if w is None:
        print(json.dumps({"witness": None, "status": "none"}))
        return 0
    ok, problems = verify_witness(g, w)
    print(json.dumps({"witness": w.to_json(g), "checked": ok, "problems": problems}, sort_keys=True))
    return 0 if ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="pisgraph",
        description="Prime ideal sum graph workbench: build, classify, embed, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build the graph of a ring spec")
    p.add_argument("spec")
    p.add_argument("--dot", help="write DOT text to this path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("classify", help="shape-based predicted profile")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("invariants", help="directly computed graph classes")
    p.add_argument("spec", nargs="?")
    p.add_argument("--graph", help="edge list file instead of a ring spec")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_invariants)

    for name in ("genus", "crosscap"):
        p = sub.add_parser(name, help=f"exact {name} with certificate")
        p.add_argument("spec", nargs="?")
        p.add_argument("--graph", help="edge list file instead of a ring spec")
        p.add_argument("--budget", type=int, default=5_000_000)
        p.set_defaults(func=lambda a, _n=name: _surface_cmd(a, _n))

    p = sub.add_parser("formulas", help="search vs closed-form values")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--max-mn", type=int, default=5)
    p.add_argument("--budget", type=int, default=20_000_000)
    p.set_defaults(func=_cmd_formulas)

    p = sub.add_parser("verify", help="predictions vs computation over a family")
    p.add_argument("--config", help="JSON family config")
    p.add_argument("--ledger", help="JSONL certificate ledger path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("find", help="find an induced pattern or subdivision")
    p.add_argument("spec", nargs="?")
    p.add_argument("--graph", help="edge list file instead of a ring spec")
    p.add_argument("--pattern", required=True)
    p.add_argument("--hints", help="comma separated vertex indices")
    p.add_argument("--budget", type=int, default=2_000_000)
    p.set_defaults(func=_cmd_find)

    args = parser.parse_args(argv)
    if getattr(args, "spec", "absent") is None and not getattr(args, "graph", None):
        print("error: either a ring spec or --graph is required", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (PisError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
