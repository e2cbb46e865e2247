"""``critgrp`` command-line interface.

Exit codes: 0 success, 2 parse error, 3 precondition violation (disconnected
input, cap exceeded, bad vertex, unsupported k, non-TU matrix), 4 a
classification or verification mismatch.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time
from collections import Counter
from pathlib import Path

from .caps import CapExceeded
from .classify import SearchBounds, classify_biconnected_graphs, classify_regular_matroids_exp2
from .fileio import ParseError, parse_divisor, parse_graph, parse_matroid
from .graph import GraphError, incidence_matrix, require_connected
from .groups import AbelianGroup
from .lattice import (
    check_definition_equivalence,
    check_exact_sequence,
    jacobian_dual_cut,
    jacobian_edge_lattice,
    jacobian_laplacian,
    projection_and_dual,
)
from .matroid import (
    MatroidError,
    RegularMatroidRep,
    exponent2_structure_check,
    exponent3_entry_diagnostics,
    has_loop,
)
from .report import FAIL, NA, PASS, Report
from .sandpile import DivisorError, dhar_burn, jacobian_by_reduced_divisors, q_reduce

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_MISMATCH = 4

ROUTES = ("laplacian", "edge-lattice", "dual-cut", "reduced-divisors", "all")


class PreconditionError(Exception):
    pass


def _read(paths: list[str]) -> tuple[list[str], str]:
    texts = []
    h = hashlib.sha256()
    for p in paths:
        try:
            data = Path(p).read_bytes()
        except OSError as exc:
            raise ParseError(f"cannot read {p}: {exc.strerror}") from None
        h.update(data)
        texts.append(data.decode())
    return texts, "sha256:" + h.hexdigest()


def _fmt_fraction(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _graph_route(G, route: str) -> AbelianGroup:
    if route == "laplacian":
        return jacobian_laplacian(G)
    if route == "edge-lattice":
        return jacobian_edge_lattice(G)
    if route == "dual-cut":
        return jacobian_dual_cut(incidence_matrix(G))
    return jacobian_by_reduced_divisors(G)


def cmd_jacobian(args, report: Report) -> int:
    (text,), report.input_digest = _read([args.path])
    if args.kind == "m":
        args.route = args.route or "dual-cut"
        if args.route not in ("dual-cut", "all"):
            raise PreconditionError("matroid input supports only the dual-cut route")
        M = RegularMatroidRep(parse_matroid(text))
        report.set_group(jacobian_dual_cut(M.matrix))
        report.details["routes"] = {"dual-cut": report.invariant_factors}
        return EXIT_OK
    args.route = args.route or "laplacian"
    G = parse_graph(text)
    require_connected(G)
    if args.route != "all":
        report.set_group(_graph_route(G, args.route))
        report.details["routes"] = {args.route: report.invariant_factors}
        return EXIT_OK
    routes = {}
    for r in ROUTES[:-1]:
        try:
            routes[r] = _graph_route(G, r)
        except CapExceeded:
            routes[r] = None
    report.set_group(routes["laplacian"])
    report.details["routes"] = {r: None if g is None else list(g.invariant_factors) for r, g in routes.items()}
    for r, g in routes.items():
        if r != "laplacian":
            report.add_check(f"{r} agrees", NA if g is None else (PASS if g == routes["laplacian"] else FAIL))
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_reduce(args, report: Report) -> int:
    (gtext, dtext), report.input_digest = _read([args.graph, args.divisor])
    G = parse_graph(gtext)
    d = parse_divisor(dtext, G.n)
    if not 0 <= args.q < G.n:
        raise PreconditionError(f"vertex {args.q} out of range")
    red = q_reduce(G, d, args.q)
    burn = dhar_burn(G, red, args.q)
    report.details = {"divisor": list(d), "q": args.q, "reduced": list(red), "burn_rounds": [list(r) for r in burn.rounds]}
    report.add_check("reduced divisor burns completely", PASS if burn.all_burnt else FAIL)
    return EXIT_OK if burn.all_burnt else EXIT_MISMATCH


def cmd_burn(args, report: Report) -> int:
    (gtext, dtext), report.input_digest = _read([args.graph, args.divisor])
    G = parse_graph(gtext)
    d = parse_divisor(dtext, G.n)
    if not 0 <= args.q < G.n:
        raise PreconditionError(f"vertex {args.q} out of range")
    burn = dhar_burn(G, d, args.q)
    report.details = {
        "divisor": list(d),
        "q": args.q,
        "burnt": sorted(burn.burnt),
        "all_burnt": burn.all_burnt,
        "burn_rounds": [list(r) for r in burn.rounds],
    }
    return EXIT_OK


def cmd_classify(args, report: Report) -> int:
    bounds = SearchBounds(
        max_vertices=args.max_vertices,
        max_edges=args.max_edges,
        max_rank=args.max_rank,
        max_elements=args.max_elements,
    )
    if args.kind == "g":
        if args.k not in (1, 2, 3):
            raise PreconditionError("graph classification supports k = 1, 2, 3")
        result = classify_biconnected_graphs(args.k, bounds, threads=args.threads)
    else:
        if args.k != 2:
            raise PreconditionError("matroid classification supports k = 2 only")
        result = classify_regular_matroids_exp2(bounds, threads=args.threads)
    report.details = result.to_dict()
    report.add_check("classification", PASS if result.matched else FAIL)
    return EXIT_OK if result.matched else EXIT_MISMATCH


def cmd_project(args, report: Report) -> int:
    (text,), report.input_digest = _read([args.path])
    if args.kind == "m":
        M = RegularMatroidRep(parse_matroid(text))
    else:
        G = parse_graph(text)
        M = RegularMatroidRep(incidence_matrix(G), verify_tu=False)
    dec = projection_and_dual(M.matrix)
    P = dec.projection
    report.set_group(jacobian_dual_cut(M.matrix))
    hist = Counter(x.denominator for row in P for x in row)
    report.details = {
        "projection": [[_fmt_fraction(x) for x in row] for row in P],
        "denominators": {str(k): v for k, v in sorted(hist.items())},
    }
    if not has_loop(M):
        for rep in (exponent2_structure_check(M), exponent3_entry_diagnostics(M)):
            if rep.applicable:
                report.details[rep.name] = rep.checks
                for name, status in rep.checks.items():
                    report.add_check(name, status)
    return EXIT_OK


def cmd_check_equivalence(args, report: Report) -> int:
    (text,), report.input_digest = _read([args.path])
    G = parse_graph(text)
    require_connected(G)
    eq = check_definition_equivalence(G)
    ex = check_exact_sequence(G)
    report.set_group(jacobian_laplacian(G))
    report.details = {"routes": eq.details["routes"]}
    for rep in (eq, ex):
        for name, status in rep.checks.items():
            report.add_check(name, status)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="critgrp", description="Jacobians of multigraphs and regular matroids.")
    parser.add_argument("--json", action="store_true", help="emit the JSON report")
    parser.add_argument("--threads", type=int, default=1, help="worker processes for classification sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jacobian", help="invariant factors of Jac")
    p.add_argument("--route", choices=ROUTES, help="default: laplacian for graphs, dual-cut for matroids")
    p.add_argument("--kind", choices=("g", "m"), default="g")
    p.add_argument("path")
    p.set_defaults(func=cmd_jacobian)

    for name, func in (("reduce", cmd_reduce), ("burn", cmd_burn)):
        p = sub.add_parser(name, help="q-reduce a divisor" if name == "reduce" else "run Dhar's burning algorithm")
        p.add_argument("--q", type=int, default=0)
        p.add_argument("graph")
        p.add_argument("divisor")
        p.set_defaults(func=func)

    p = sub.add_parser("classify", help="bounded classification search")
    p.add_argument("--kind", choices=("g", "m", "graphs", "matroids"), default="g")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-vertices", type=int, default=6)
    p.add_argument("--max-edges", type=int, default=8)
    p.add_argument("--max-rank", type=int, default=3)
    p.add_argument("--max-elements", type=int, default=5)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("project", help="exact cut-space projection and its diagnostics")
    p.add_argument("--kind", choices=("g", "m"), default="g")
    p.add_argument("path")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("check-equivalence", help="compare every Jacobian route")
    p.add_argument("path")
    p.set_defaults(func=cmd_check_equivalence)
    return parser


def _print_text(report: Report, out) -> None:
    print(f"command: {report.command}", file=out)
    if report.order is not None:
        group = AbelianGroup(tuple(report.invariant_factors))
        print(f"jacobian: {group}", file=out)
        print(f"invariant factors: {report.invariant_factors}", file=out)
        print(f"exponent: {report.exponent}  order: {report.order}", file=out)
    for key, value in report.details.items():
        if key == "projection":
            print("projection:", file=out)
            for row in value:
                print("  " + "  ".join(f"{x:>6}" for x in row), file=out)
        else:
            print(f"{key}: {value}", file=out)
    for c in report.checks:
        print(f"[{c['status']}] {c['name']}", file=out)


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "kind", None) in ("graphs", "matroids"):
        args.kind = args.kind[0]
    report = Report(command=args.command)
    start = time.perf_counter()
    try:
        code = args.func(args, report)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, CapExceeded, GraphError, DivisorError, MatroidError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    report.timing = round(time.perf_counter() - start, 6)
    if args.json:
        print(report.to_json(indent=2), file=out)
    else:
        _print_text(report, out)
    return code


def main_entry() -> None:
    sys.exit(main())
