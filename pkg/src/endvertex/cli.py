"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 bad input, 3 a group could not be realized.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import coprimegraph as cg
from .classifier import analyze_entries, check_expectations, classify, verify_paper_tables
from .constructions import CATALOG_ENV, GroupSpec, load_catalog, parse_spec
from .errors import CatalogParseError, EndVertexError, PresentationSyntaxError
from .numtheory import rad
from .permgroup import is_p_group
from .theorems import run_full_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_REALIZE = 0, 1, 2, 3


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _spec(args) -> GroupSpec:
    text = Path(args.file).read_text(encoding="utf-8") if args.file else args.spec
    if not text:
        raise _Exit(EXIT_INPUT, "no group spec given (positional SPEC or -f FILE)")
    try:
        return parse_spec(text.strip())
    except PresentationSyntaxError as exc:
        raise _Exit(EXIT_INPUT, f"cannot parse spec: {exc}") from None


def _realize(spec: GroupSpec):
    try:
        return spec.build()
    except EndVertexError as exc:
        raise _Exit(EXIT_REALIZE, f"cannot realize {spec}: {exc}") from None


def _catalog(args):
    try:
        return load_catalog(args.catalog)
    except (OSError, CatalogParseError) as exc:
        raise _Exit(EXIT_INPUT, f"cannot load catalog: {exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def cmd_info(args) -> int:
    G = _realize(_spec(args))
    report = cg.end_vertices(cg.build_graph(G))
    info = {
        "label": G.label,
        "order": G.order,
        "order_multiset": {str(k): v for k, v in G.order_multiset().items()},
        "rad": rad(G.order),
        "p_group": is_p_group(G),
        "abelian": G.is_abelian(),
        "end_vertices": report.count,
    }
    if args.json:
        print(_dump(info))
    else:
        print(f"group:        {G.label}")
        print(f"order:        {G.order}")
        print("orders:       " + ", ".join(f"{k}^{v}" for k, v in G.order_multiset().items()))
        print(f"rad(|G|):     {info['rad']}")
        p = info["p_group"]
        print(f"p-group:      {'yes, p = %d' % p if p else 'no'}")
        print(f"abelian:      {'yes' if info['abelian'] else 'no'}")
        print(f"|E_G|:        {report.count}")
    return EXIT_OK


def cmd_graph(args) -> int:
    G = _realize(_spec(args))
    graph = cg.build_graph(G)
    text = cg.export(graph, args.format)
    if args.output:
        Path(args.output).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    print(f"{G.label}: |E_G| = {cg.end_vertices(graph).count}", file=sys.stderr)
    return EXIT_OK


def cmd_analyze(args) -> int:
    G = _realize(_spec(args))
    results = run_full_suite(G)
    ok = all(r.holds for r in results)
    if args.json:
        print(_dump({"label": G.label, "order": G.order, "passed": ok, "checks": [r.to_dict() for r in results]}))
    else:
        ends = cg.end_vertices(cg.build_graph(G))
        print(f"{G.label}: |G| = {G.order}, |E_G| = {ends.count}, end-vertex orders {ends.end_vertex_orders}")
        for r in results:
            extra = r.witness or ", ".join(f"{k}={v}" for k, v in r.details.items())
            print(f"  {r.status:6} {r.name:26} {extra}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_classify(args) -> int:
    if args.n < 0:
        raise _Exit(EXIT_INPUT, "n must be non-negative")
    report = classify(args.n, _catalog(args), jobs=args.jobs)
    if args.json:
        print(_dump(report.to_dict()))
    else:
        print(report.summary())
        print(f"  admissible orders: {report.admissible.reason}")
        for label, order, _ in report.matches:
            print(f"  {label:14} order {order}")
        for label, order, ctx in report.extras:
            print(f"  extra: {label} (order {order}): {ctx}")
        for key, verdict in report.verdicts.items():
            if verdict != "found":
                print(f"  expected {key}: {verdict}")
        for label, err in report.errors:
            print(f"  error: {label}: {err}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify_paper(args) -> int:
    catalog = _catalog(args)
    reports = verify_paper_tables(catalog, jobs=args.jobs)
    ok = all(r.passed for r in reports)
    if args.json:
        print(_dump({"passed": ok, "reports": [r.to_dict() for r in reports]}))
    else:
        for r in reports:
            print(r.summary())
            found = sum(v == "found" for v in r.verdicts.values())
            if r.verdicts:
                print(f"    expected found: {found}/{len(r.verdicts)}", end="")
                skipped = sum(v == "not-bundled" for v in r.verdicts.values())
                print(f" ({skipped} not bundled)" if skipped else "")
        print("verify-paper: " + ("PASS" if ok else "FAIL"))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_catalog(args) -> int:
    catalog = _catalog(args)
    analyses = analyze_entries(list(catalog), args.jobs)
    bad = check_expectations(catalog, analyses=analyses)
    rows = []
    for e in catalog:
        a = analyses[e.label]
        rows.append({
            "label": e.label,
            "spec": str(e.spec),
            "order": e.order,
            "end_vertices": a.end_vertex_count,
            "expect": e.expected_end_vertices,
            "sgid": list(e.small_group_id) if e.small_group_id else None,
            "error": a.error,
        })
    if args.json:
        print(_dump({"complete_orders": sorted(catalog.complete_orders), "entries": rows}))
    else:
        for r in rows:
            sg = "(%d,%d)" % tuple(r["sgid"]) if r["sgid"] else ""
            print(f"{r['label']:14} {r['order']:4} |E_G|={r['end_vertices']!s:>3} {sg:10} {r['spec']}")
        for label, want, got, err in bad:
            print(f"mismatch: {label}: expected {want}, computed {got} {err or ''}", file=sys.stderr)
    return EXIT_FAIL if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="endvertex", description="Coprime graphs and end vertices of finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def spec_args(p):
        p.add_argument("spec", nargs="?", help='group spec, e.g. "Dihedral(12)" or \'Presented("< a | a^5 = e >")\'')
        p.add_argument("-f", "--file", help="read the group spec from a file")

    def catalog_args(p):
        p.add_argument("--catalog", help=f"catalog file (default: ${CATALOG_ENV} or the bundled catalog)")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for group realization")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("info", help="order statistics of a group")
    spec_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("graph", help="export the coprime graph")
    spec_args(p)
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("analyze", help="run every structural check on one group")
    spec_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="catalog groups with exactly N end vertices")
    p.add_argument("n", type=int)
    catalog_args(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-paper", help="reproduce the classification lists for 1 <= n <= 10")
    catalog_args(p)
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("catalog", help="list catalog entries with computed end-vertex counts")
    catalog_args(p)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"endvertex: {exc}", file=sys.stderr)
        return exc.code
    except OSError as exc:
        print(f"endvertex: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
