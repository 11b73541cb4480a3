"""bei-lab: command-line front end.

Exit codes: 0 ok, 1 theorem or expectation mismatch, 2 input error,
3 unsupported size.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks, corpus
from .bei import v_init, v_number
from .domination import gamma_c
from .errors import BeiLabError, InputError
from .graph import Graph, parse_graph_text
from .report import build_report
from .structure import longest_induced_path, theta_clique_cover

EXIT_OK, EXIT_MISMATCH = 0, 1


def _load(path: str) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph_text(text)


def cmd_invariants(args) -> int:
    report = build_report(_load(args.file))
    print(report.to_json() if args.json else report.to_text())
    return EXIT_OK


def cmd_gamma_c(args) -> int:
    res = gamma_c(_load(args.file))
    print(f"gamma_c {res.gamma_c}")
    print("witness " + " ".join(map(str, sorted(res.witness))))
    print(f"lf_max {res.lf_max}")
    print("tree " + " ".join(f"{u}-{v}" for u, v in res.tree_witness))
    return EXIT_OK


def cmd_vnumber(args) -> int:
    g = _load(args.file)
    if args.mode == "combinatorial":
        report = v_number(g, max_degree=args.max_degree)
    elif args.mode == "algebraic":
        report = v_number(g, shortcut=False, max_degree=args.max_degree)
    else:
        report = v_number(g, mode="both", shortcut=False, max_degree=args.max_degree)
        shortcut = v_number(g)
        if shortcut.v != report.v:
            print(f"mismatch: algebraic {report.v}, with shortcut {shortcut.v}", file=sys.stderr)
            return EXIT_MISMATCH
    print(f"v {report.v}")
    print(f"v_at_Kn {'n/a' if report.v_at_Kn is None else report.v_at_Kn}")
    print(f"achieving_prime {report.achieving_prime}")
    print(f"method {report.method}")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = [args.check] if args.check else list(checks.CHECKS)
    unknown = [n for n in names if n not in checks.CHECKS]
    if unknown:
        raise InputError(f"unknown check {unknown[0]!r}; choose from {', '.join(checks.CHECKS)}")
    failed = False
    for name in names:
        result = checks.run_check(name, args.n, args.seed)
        print(result.line(), flush=True)
        failed |= not result.passed
    return EXIT_MISMATCH if failed else EXIT_OK


def _table_row(entry: corpus.TableEntry) -> dict:
    v = v_number(entry.graph).v
    vi = v_init(entry.graph)
    return {
        "index": entry.index,
        "edges": [list(e) for e in entry.graph.edges],
        "v": v,
        "v_init": vi,
        "expected": [entry.v, entry.v_init],
        "best_effort": entry.best_effort,
        "match": (v, vi) == (entry.v, entry.v_init),
    }


def cmd_table5(args) -> int:
    rows = checks.parallel_map(_table_row, corpus.table_five())
    # hard comparisons skip the ambiguous drawing
    mismatches = [r for r in rows if not r["match"] and not r["best_effort"]]
    if args.json:
        print(json.dumps(rows))
    else:
        for r in rows:
            edges = " ".join(f"{u}{v}" for u, v in r["edges"])
            status = "ok" if r["match"] else "MISMATCH"
            flag = "  (best-effort labeling)" if r["best_effort"] else ""
            exp = tuple(r["expected"])
            print(f"{r['index']:2d}  ({r['v']}, {r['v_init']})  expected {exp}  {status}  {edges}{flag}")
    for r in mismatches:
        print(f"mismatch in table row {r['index']}", file=sys.stderr)
    return EXIT_MISMATCH if mismatches else EXIT_OK


def _example_values(ex: corpus.Expectation) -> dict:
    g = ex.graph
    vr = v_number(g)
    dom = gamma_c(g)
    return {
        "v": vr.v,
        "v_at_Kn": vr.v_at_Kn,
        "v_init": v_init(g),
        "gamma_c": dom.gamma_c,
        "theta": theta_clique_cover(g)[0],
        "ell": longest_induced_path(g),
        "lf_max": dom.lf_max,
    }


def cmd_examples(args) -> int:
    failed = False
    for ex in corpus.EXAMPLES:
        got = _example_values(ex)
        for key, value in got.items():
            expected = getattr(ex, key)
            if expected is None:
                continue
            ok = value == expected
            failed |= not ok
            print(f"{'ok' if ok else 'MISMATCH':8s} {ex.name:14s} {key:8s} computed {value}  expected {expected}")
    return EXIT_MISMATCH if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bei-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="full invariant report for one graph")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("gamma-c", help="connected domination number and a max-leaf tree")
    p.add_argument("file")
    p.set_defaults(func=cmd_gamma_c)

    p = sub.add_parser("vnumber", help="v-number of the binomial edge ideal")
    p.add_argument("file")
    p.add_argument("--mode", choices=("algebraic", "combinatorial", "both"), default="combinatorial")
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(func=cmd_vnumber)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--check", default=None, help="one of: " + ", ".join(checks.CHECKS))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table5", help="all connected 5-vertex graphs against the stored table")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table5)

    p = sub.add_parser("examples", help="named example graphs against stored values")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BeiLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
