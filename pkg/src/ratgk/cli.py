"""Command-line front end.

Commands:
    graph        emit the GK-graph of a group (DOT or JSON report)
    rational     rationality report for a group
    cut          cut report for a group
    classify     match a group against the six solvable-rational graphs
    orbits       orbit decomposition of the natural module of a matrix group
    verify-paper run the complete fact suite
    witnesses    run the witness-construction suite
    search       look for a group with a prescribed GK-graph

Exit codes: 0 when every asserted fact passed, 1 when an assertion failed,
2 on invalid input.  Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import RatgkError
from .groups import DEFAULT_ORDER_CAP
from .groupspec import load_group_spec
from .linalg import ModuleAction
from .rationality import (PrimeGraph, classify_rational_solvable, gk_graph,
                          is_cut, is_rational, rationality_report,
                          search_witness)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _build(args):
    spec = load_group_spec(args.spec)
    return spec.build(cap=args.cap)


def _graph_json(graph: PrimeGraph) -> dict:
    return {"vertices": list(graph.vertices),
            "edges": [list(e) for e in graph.edges]}


def cmd_graph(args) -> int:
    G = _build(args)
    graph = gk_graph(G)
    if args.format == "dot":
        _emit(graph.dot(), args.out)
    else:
        _emit(_json_text(_graph_json(graph)), args.out)
    return EXIT_OK


def _report_json(report) -> dict:
    return {
        "group": report.group_name,
        "order": report.group_order,
        "rational": report.rational,
        "cut": report.cut,
        "normalizer_criterion": report.normalizer_criterion,
        "cyclic_subgroups": [
            {"representative": r.rep_label, "order": r.order, "phi": r.phi,
             "generator_classes": r.generator_classes,
             "norm_cent_index": r.norm_cent_index, "cut": r.cut}
            for r in report.records],
    }


def cmd_rational(args) -> int:
    G = _build(args)
    report = rationality_report(G)
    if args.format == "report":
        _emit(_json_text(_report_json(report)), args.out)
    else:
        _emit(report.to_text(), args.out)
    return EXIT_OK


def cmd_cut(args) -> int:
    G = _build(args)
    report = rationality_report(G)
    if args.format == "report":
        _emit(_json_text(_report_json(report)), args.out)
    else:
        _emit(f"group {report.group_name} of order {report.group_order}: "
              f"cut={report.cut}", args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    G = _build(args)
    verdict = classify_rational_solvable(G)
    if args.format == "report":
        _emit(_json_text({
            "group": verdict.group_name,
            "order": verdict.group_order,
            "graph": _graph_json(verdict.graph),
            "nontrivial": verdict.nontrivial,
            "solvable": verdict.solvable,
            "rational": verdict.rational,
            "matches_main_theorem": verdict.matches_main_theorem,
            "figure": None if verdict.figure_index is None
            else verdict.figure_index + 1,
            "reason": verdict.reason,
        }), args.out)
    else:
        _emit(verdict.to_text(), args.out)
    return EXIT_OK


def cmd_orbits(args) -> int:
    G = _build(args)
    from .groups import MatrixGroup, SemidirectProductGroup
    if isinstance(G, SemidirectProductGroup):
        action = G.action
    else:
        try:
            action = ModuleAction.natural(G)
        except RatgkError:
            raise RatgkError("orbits needs a matrix or semidirect spec")
    orbits = action.orbit_partition()
    if args.format == "report":
        _emit(_json_text({"dimension": action.dim, "p": action.p,
                          "orbits": [sorted(map(list, o)) for o in orbits]}),
              args.out)
    else:
        lines = [f"{len(orbits)} orbits on GF({action.p})^{action.dim}:"]
        for o in orbits:
            members = " ".join("(" + ",".join(map(str, v)) + ")"
                               for v in sorted(o))
            lines.append(f"  size {len(o)}: {members}")
        _emit("\n".join(lines), args.out)
    return EXIT_OK


def _run_fact_suite(report, args) -> int:
    if args.format == "report":
        _emit(_json_text(report.to_json_dict()), args.out)
    else:
        _emit(report.to_text(), args.out)
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_verify_paper(args) -> int:
    from .facts import full_suite
    return _run_fact_suite(full_suite(cap=args.cap), args)


def cmd_witnesses(args) -> int:
    from .facts import witness_suite
    return _run_fact_suite(witness_suite(cap=args.cap), args)


def parse_target_graph(text: str) -> PrimeGraph:
    """Parse "2,3,5:2-3,2-5" into a prime graph (edge part optional)."""
    head, _, tail = text.partition(":")
    try:
        vertices = [int(v) for v in head.split(",") if v]
        edges = []
        for part in tail.split(","):
            if not part:
                continue
            a, b = part.split("-")
            edges.append((int(a), int(b)))
        return PrimeGraph.make(vertices, edges)
    except ValueError as exc:
        raise RatgkError(f"bad target graph {text!r}: {exc}") from None


def cmd_search(args) -> int:
    target = parse_target_graph(args.target)
    result = search_witness(target, space=args.space, cap=args.cap)
    found = result.found
    payload = {
        "target": _graph_json(target),
        "space": result.space,
        "examined": result.examined,
        "skipped_cap": result.skipped_cap,
        "found": None if found is None else
        {"name": found.name, "order": found.order},
    }
    if args.format == "report":
        _emit(_json_text(payload), args.out)
    elif found is None:
        _emit(f"no group with graph {target} in space {args.space} "
              f"({result.examined} candidates examined)", args.out)
    else:
        _emit(f"found {found.name} of order {found.order} with graph "
              f"{target} ({result.examined} candidates examined)", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratgk",
        description="rationality and GK-graph computations for small finite groups")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, spec=True, formats=("text", "report")):
        if spec:
            p.add_argument("--spec", required=True,
                           help="path to a group-spec JSON document")
        p.add_argument("--format", choices=formats, default=formats[0],
                       help="output format")
        p.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP,
                       help="element cap for group construction "
                            "(default from RATGK_CAP or 50000)")
        p.add_argument("--out", help="write output to this file")

    p = sub.add_parser("graph", help="emit the GK-graph")
    common(p, formats=("dot", "report"))
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("rational", help="rationality report")
    common(p)
    p.set_defaults(func=cmd_rational)

    p = sub.add_parser("cut", help="cut report")
    common(p)
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("classify", help="match against the six graphs")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("orbits", help="module orbit decomposition")
    common(p)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("verify-paper", help="run the complete fact suite")
    common(p, spec=False)
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("witnesses", help="run the witness suite")
    common(p, spec=False)
    p.set_defaults(func=cmd_witnesses)

    p = sub.add_parser("search", help="search a space for a target graph")
    common(p, spec=False)
    p.add_argument("--target", required=True,
                   help='target graph, e.g. "2,3,5:2-3,2-5"')
    p.add_argument("--space", choices=("named", "gl1", "gl2"),
                   default="named", help="search space")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RatgkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
