"""Command-line front end: sbgkit <subcommand>.

Exit codes: 0 success (for `verify`: proof accepted), 1 failed check or
rejected proof, 2 malformed input, 3 solver resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import fixtures
from .graph import Graph, GraphError, build_sbg, bits, is_sbg, parse_edge_list, write_edge_list
from .ics import color_table, is_ics, motif_class_sets, signatures
from .encode import (
    Assignment,
    OpbError,
    encode_ics,
    parse_opb,
    write_opb,
)
from .oracle import classify_solutions, count_ics
from .proof import ProofParseError, VerifyError, parse_proof, verify
from .solve import SolveLimitReached, enumerate_all, solve

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_LIMIT = 3


def _load_graph(path: str) -> Graph:
    return parse_edge_list(Path(path).read_text())


def _name_table_lines(names: tuple[str, ...]) -> str:
    return "\n".join(f"* name x{i + 1} {n}" for i, n in enumerate(names)) + "\n"


def _witness_line(a: Assignment) -> str:
    parts = []
    for var in range(1, a.num_vars + 1):
        v = a.value(var)
        if v is None:
            continue
        parts.append(f"x{var}" if v else f"-x{var}")
    return "v " + " ".join(parts)


def _solution_json(a: Assignment, names: tuple[str, ...] | None) -> str:
    obj = {}
    for var in range(1, a.num_vars + 1):
        v = a.value(var)
        if v is None:
            continue
        key = names[var - 1] if names else f"x{var}"
        obj[key] = v
    return json.dumps(obj, sort_keys=True)


def _cmd_build_sbg(args) -> int:
    g = build_sbg()
    text = write_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
        Path(args.out + ".names").write_text(_name_table_lines(g.names()))
        print(f"wrote {args.out} ({g.n} nodes, {g.edge_count} edges) and {args.out}.names")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_check_ics(args) -> int:
    g = _load_graph(args.graph)
    code = g.parse_node_set(args.set)
    sigs = signatures(g, code)
    for v, sig in enumerate(sigs):
        members = ",".join(g.node_name(u) for u in bits(sig)) or "-"
        print(f"{g.node_name(v)}: {{{members}}}")
    verdict = is_ics(g, code)
    print(f"identifying code: {'yes' if verdict else 'no'}")
    return EXIT_OK


def _cmd_color(args) -> int:
    g = _load_graph(args.graph)
    injected = g.parse_node_set(args.inject)
    for name, cell in color_table(g, injected):
        print(f"{name}: {cell}")
    return EXIT_OK


def _cmd_encode(args) -> int:
    g = _load_graph(args.graph)
    f = encode_ics(g, args.budget, exact=args.exact)
    text = write_opb(f)
    Path(args.out).write_text(text)
    names = f.names or tuple(f"x{i+1}" for i in range(f.num_vars))
    Path(args.out + ".names").write_text(_name_table_lines(names))
    print(f"wrote {args.out}: {len(f.constraints)} constraints over {f.num_vars} variables")
    return EXIT_OK


def _cmd_solve(args) -> int:
    try:
        f = parse_opb(Path(args.opb).read_text())
    except OpbError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        res = solve(f)
    except SolveLimitReached as exc:
        print(f"s UNKNOWN ({exc})")
        return EXIT_LIMIT
    if res.is_sat:
        print("s SATISFIABLE")
        print(_witness_line(res.witness))
    else:
        print("s UNSATISFIABLE")
    return EXIT_OK


def _parse_projection(f, selector: str | None) -> list[int] | None:
    if selector is None:
        return None
    want = [s.strip() for s in selector.split(",") if s.strip()]
    out = []
    for token in want:
        if token.startswith("x") and token[1:].isdigit():
            out.append(int(token[1:]))
        elif f.names and token in f.names:
            out.append(f.names.index(token) + 1)
        else:
            raise OpbError(0, f"unknown projection variable {token!r}")
    return out


def _cmd_enumerate(args) -> int:
    try:
        f = parse_opb(Path(args.opb).read_text())
        proj = _parse_projection(f, args.project)
    except OpbError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        sols = enumerate_all(f, proj)
    except SolveLimitReached as exc:
        print(f"s UNKNOWN ({exc})")
        return EXIT_LIMIT
    print(f"c {len(sols)} solutions")
    lines = []
    for a in sols:
        print(_witness_line(a))
        lines.append(_solution_json(a, f.names))
    if args.solutions:
        Path(args.solutions).write_text("\n".join(lines) + ("\n" if lines else ""))
        print(f"c wrote {args.solutions}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        f = parse_opb(Path(args.opb).read_text())
    except OpbError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        steps = parse_proof(Path(args.proof).read_text())
    except ProofParseError as exc:
        print(f"proof parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        outcome = verify(f, steps)
    except VerifyError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(f"s VERIFIED (contradiction id {outcome.contradiction_id})")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    count, sols = count_ics(g, args.k, collect=args.list or args.classify)
    print(f"c {count} identifying codes of size {args.k}")
    if args.list:
        for mask in sols:
            print(",".join(sorted(g.node_name(v) for v in bits(mask))))
    if args.classify:
        if not is_sbg(g):
            print("error: --classify applies to the soccer ball graph only", file=sys.stderr)
            return EXIT_FAIL
        hist = classify_solutions(sols)
        for family in sorted(hist.counts):
            print(f"class {family}: {hist.counts[family]}")
        print(f"unmatched: {len(hist.unmatched)}")
    return EXIT_OK


# -- the full reproduction pipeline ---------------------------------------------


def _cmd_reproduce(args) -> int:
    checks: list[dict] = []

    def check(name: str, expected, actual) -> bool:
        ok = expected == actual
        checks.append(
            {"check": name, "expected": repr(expected), "actual": repr(actual), "pass": ok}
        )
        print(f"[{'PASS' if ok else 'FAIL'}] {name}: expected {expected}, got {actual}")
        return ok

    t0 = time.time()
    g = build_sbg()
    check("sbg node count", 32, g.n)
    check("sbg edge count", 90, g.edge_count)
    degs = sorted(g.degree(v) for v in range(g.n))
    check("sbg degree histogram", {5: 12, 6: 20}, {d: degs.count(d) for d in sorted(set(degs))})

    class_i = next(m for m in motif_class_sets() if m.family == "I")
    check("ring injection is an identifying code", True, is_ics(g, class_i.members))

    f9 = encode_ics(g, 9)
    check("budget-9 encoding size", 273, len(f9.constraints))

    c8, _ = count_ics(g, 8)
    check("exhaustive count at size 8", 0, c8)
    c9, _ = count_ics(g, 9)
    check("exhaustive count at size 9", 0, c9)

    try:
        res9 = solve(f9)
        check("solver at budget 9", "UNSAT", res9.status)
    except SolveLimitReached:
        check("solver at budget 9", "UNSAT", "inconclusive (node limit)")

    f10 = encode_ics(g, 10)
    try:
        res10 = solve(f10)
        check("solver at budget 10", "SAT", res10.status)
    except SolveLimitReached:
        check("solver at budget 10", "SAT", "inconclusive (node limit)")

    c10, sols10 = count_ics(g, 10, collect=True)
    check("exhaustive count at size 10", 26, c10)

    try:
        enum = enumerate_all(encode_ics(g, 10, exact=True))
        check("solver enumeration count", 26, len(enum))
        enum_masks = sorted(a.code_mask() for a in enum)
        check("solver and oracle agree on the solution set", True, enum_masks == sorted(sols10))
    except SolveLimitReached:
        check("solver enumeration count", 26, "inconclusive (node limit)")

    hist = classify_solutions(sols10)
    check(
        "class histogram",
        {"I": 1, "II": 10, "III": 10, "IV": 5},
        hist.counts,
    )
    check("unclassified solutions", 0, len(hist.unmatched))

    f_ex = parse_opb(fixtures.EXAMPLE_UNSAT_OPB)
    try:
        outcome = verify(f_ex, parse_proof(fixtures.EXAMPLE_UNSAT_PROOF))
        check("refutation fixture verifies", True, outcome.contradiction_id == 14)
    except (ProofParseError, VerifyError) as exc:
        check("refutation fixture verifies", True, f"rejected: {exc}")

    report_path = Path(args.report)
    report_path.write_text(json.dumps(checks, indent=2) + "\n")
    ok = all(c["pass"] for c in checks)
    print(f"{'all checks passed' if ok else 'SOME CHECKS FAILED'} "
          f"({sum(c['pass'] for c in checks)}/{len(checks)}, {time.time() - t0:.1f}s); "
          f"report: {report_path}")
    return EXIT_OK if ok else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(prog="sbgkit", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-sbg", help="write the soccer ball graph edge list")
    p.add_argument("--out", help="output path (stdout when omitted)")
    p.set_defaults(fn=_cmd_build_sbg)

    p = sub.add_parser("check-ics", help="print signatures and the code verdict")
    p.add_argument("--graph", required=True)
    p.add_argument("--set", required=True, help="comma-separated node names")
    p.set_defaults(fn=_cmd_check_ics)

    p = sub.add_parser("color", help="seepage coloring table in star notation")
    p.add_argument("--graph", required=True)
    p.add_argument("--inject", required=True, help="comma-separated node names")
    p.set_defaults(fn=_cmd_color)

    p = sub.add_parser("encode", help="encode the code-size decision as OPB")
    p.add_argument("--graph", required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--exact", action="store_true", help="force the size up to the budget too")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_encode)

    p = sub.add_parser("solve", help="decide satisfiability of an OPB file")
    p.add_argument("opb")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("enumerate", help="enumerate all solutions of an OPB file")
    p.add_argument("opb")
    p.add_argument("--project", help="comma-separated variable names to project onto")
    p.add_argument("--solutions", help="write solutions as JSON lines to this path")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("verify", help="check a cutting-planes refutation proof")
    p.add_argument("opb")
    p.add_argument("proof")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive identifying-code count")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--list", action="store_true", help="print each code found")
    p.add_argument("--classify", action="store_true", help="histogram by SBG family")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("reproduce", help="run the whole certification pipeline")
    p.add_argument("--report", default="reproduce_report.json")
    p.set_defaults(fn=_cmd_reproduce)

    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (GraphError, OpbError, ProofParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
