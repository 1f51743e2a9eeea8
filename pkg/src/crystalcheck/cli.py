"""Command-line interface.

Exit codes partition the outcomes: 0 success, 1 axiom violations or
predicate failures, 2 input/parse/config errors, 3 census budget exceeded.
Output is byte-identical across runs on identical input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .axioms import Labeling, check_global, check_local, infer_labelings, labels_from_marking
from .documents import document_from_graph, dumps_document, parse_document
from .enumeration import (
    GraphStream,
    census,
    census_rows_to_csv,
    enumerate_graphs,
    resolve_workers,
)
from .errors import BudgetError, CounterexampleError, CrystalCheckError, DocumentError
from .graph import (
    ColoredDigraph,
    CycleCertificate,
    check_degree_axiom,
    decompose_strings,
    find_potential,
    weak_components,
)
from .predicates import FAILS, HOLDS, check_corollary2, check_corollary3, check_string_words
from .violations import CLAUSE_ACYCLICITY, CLAUSE_CONNECTIVITY, CLAUSE_INFERENCE, Violation

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _error(message: str) -> None:
    print(f"crystalcheck: error: {message}", file=sys.stderr)


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _predicate_dicts(g: ColoredDigraph, lab: Labeling) -> list[dict]:
    """The three predicate reports for one labeling, with the per-color
    string-word checks merged into a single report."""
    reports = [check_corollary2(g, lab).as_jsonable(), check_corollary3(g, lab).as_jsonable()]
    words1 = check_string_words(decompose_strings(g, 1), lab)
    words2 = check_string_words(decompose_strings(g, 2), lab)
    if FAILS in (words1.status, words2.status):
        status = FAILS
        witnesses = [w for r in (words1, words2) if r.status == FAILS for w in r.witnesses]
    else:
        status = HOLDS
        witnesses = list(words1.witnesses) + list(words2.witnesses)
    reports.append({"predicate": "string-words", "status": status, "witnesses": witnesses})
    return reports


def _render_text(result: dict) -> str:
    lines = [
        f"graph: {result['graph']['vertices']} vertices, {result['graph']['edges']} edges, "
        f"{result['graph']['components']} component(s)",
        f"mode: {result['mode']}",
    ]
    for check in result["checks"]:
        name = check["check"]
        if not check.get("enforced", True):
            lines.append(f"check {name}: skipped")
            continue
        if check["violations"]:
            lines.append(f"check {name}: {len(check['violations'])} violation(s)")
            for violation in check["violations"]:
                at = violation["at"]
                at_text = "->".join(map(str, at)) if isinstance(at, list) else at
                lines.append(f"  {violation['clause']} at {at_text}: {violation['detail']}")
        else:
            lines.append(f"check {name}: ok")
    if "derived_labels" in result:
        pairs = ", ".join(f"{v}={label}" for v, label in result["derived_labels"].items())
        lines.append(f"derived labels: {pairs}")
    for predicate in result.get("predicates", []):
        lines.append(f"predicate {predicate['predicate']}: {predicate['status']}")
    if "labelings" in result:
        lines.append(f"labelings found: {len(result['labelings'])}")
        for entry in result["labelings"]:
            pairs = ", ".join(f"{v}={label}" for v, label in entry["labels"].items())
            lines.append(f"  labels: {pairs}")
            for predicate in entry["predicates"]:
                lines.append(f"    predicate {predicate['predicate']}: {predicate['status']}")
    lines.append("result: ok" if result["ok"] else "result: violations found")
    return "\n".join(lines)


def _cmd_validate(args) -> int:
    try:
        data = _read_input(args.input)
    except OSError as exc:
        _error(str(exc))
        return EXIT_INPUT
    try:
        doc = parse_document(data)
    except DocumentError as exc:
        _error(str(exc))
        return EXIT_INPUT

    g = doc.graph
    if args.mode == "labels" and doc.labels is None:
        _error("--mode labels requires a 'labels' key in the document")
        return EXIT_INPUT
    if args.mode == "centers" and doc.marking is None:
        _error("--mode centers requires a 'centers' key in the document")
        return EXIT_INPUT
    if args.mode == "auto":
        mode = "labels" if doc.labels is not None else (
            "centers" if doc.marking is not None else "inference"
        )
    else:
        mode = args.mode

    components = weak_components(g)
    result: dict = {
        "command": "validate",
        "mode": mode,
        "graph": {
            "vertices": g.n_vertices,
            "edges": len(g.edges),
            "components": len(components),
        },
        "checks": [],
    }
    checks = result["checks"]

    structural_ok = False
    degree = check_degree_axiom(g)
    checks.append({"check": "degree", "violations": degree.as_jsonable()})
    if not degree:
        potential = find_potential(g)
        if isinstance(potential, CycleCertificate):
            detail = "directed cycle: " + " -> ".join(potential.vertices)
            checks.append({"check": "acyclicity", "violations": [
                Violation(CLAUSE_ACYCLICITY, potential.vertices[0], detail).as_jsonable()
            ]})
        else:
            checks.append({"check": "acyclicity", "violations": []})
            connectivity: list[dict] = []
            if args.require_connected and len(components) > 1:
                detail = f"graph has {len(components)} weakly-connected components"
                connectivity = [
                    Violation(CLAUSE_CONNECTIVITY, components[1][0], detail).as_jsonable()
                ]
            checks.append({
                "check": "connectivity",
                "violations": connectivity,
                "enforced": args.require_connected,
            })
            structural_ok = True

    predicate_fail = False
    if structural_ok:
        if mode == "labels":
            local = check_local(g, doc.labels)
            checks.append({"check": "local", "violations": local.as_jsonable()})
            if not local:
                result["predicates"] = _predicate_dicts(g, doc.labels)
        elif mode == "centers":
            global_report = check_global(g, doc.marking)
            checks.append({"check": "global", "violations": global_report.as_jsonable()})
            if not global_report:
                derived = labels_from_marking(g, doc.marking)
                result["derived_labels"] = derived.as_jsonable(g)
                result["predicates"] = _predicate_dicts(g, derived)
        else:
            labelings = infer_labelings(g)
            if not labelings:
                checks.append({"check": "inference", "violations": [
                    Violation(
                        CLAUSE_INFERENCE, g.vertices[0],
                        "no labeling satisfies the local axioms",
                    ).as_jsonable()
                ]})
                result["labelings"] = []
            else:
                result["labelings"] = [
                    {
                        "labels": lab.as_jsonable(g),
                        "predicates": _predicate_dicts(g, lab),
                    }
                    for lab in labelings
                ]
        for predicate in result.get("predicates", []):
            predicate_fail = predicate_fail or predicate["status"] == FAILS
        for entry in result.get("labelings", []):
            for predicate in entry["predicates"]:
                predicate_fail = predicate_fail or predicate["status"] == FAILS

    any_violation = any(check["violations"] for check in checks)
    result["ok"] = not any_violation and not predicate_fail

    if args.format == "json":
        print(json.dumps(result, indent=2))
    else:
        print(_render_text(result))
    return EXIT_OK if result["ok"] else EXIT_VIOLATIONS


def _cmd_infer(args) -> int:
    try:
        data = _read_input(args.input)
    except OSError as exc:
        _error(str(exc))
        return EXIT_INPUT
    try:
        doc = parse_document(data)
    except DocumentError as exc:
        _error(str(exc))
        return EXIT_INPUT

    g = doc.graph
    degree = check_degree_axiom(g)
    if degree:
        print(json.dumps({"command": "infer", "violations": degree.as_jsonable()}, indent=2))
        return EXIT_VIOLATIONS
    potential = find_potential(g)
    if isinstance(potential, CycleCertificate):
        detail = "directed cycle: " + " -> ".join(potential.vertices)
        violations = [Violation(CLAUSE_ACYCLICITY, potential.vertices[0], detail).as_jsonable()]
        print(json.dumps({"command": "infer", "violations": violations}, indent=2))
        return EXIT_VIOLATIONS

    for lab in infer_labelings(g):
        print(json.dumps(lab.as_jsonable(g), separators=(",", ":")))
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    try:
        stream = GraphStream(max_vertices=args.max_vertices, canonical=not args.no_canonical)
    except ValueError as exc:
        _error(str(exc))
        return EXIT_INPUT
    for g in enumerate_graphs(stream):
        print(dumps_document(document_from_graph(g), compact=True))
    return EXIT_OK


def _cmd_census(args) -> int:
    def report_gap(g: ColoredDigraph, lab: Labeling, report) -> None:
        doc = dumps_document(document_from_graph(g, labels=lab), compact=True)
        print(f"note: {report.predicate} fails on {doc}", file=sys.stderr)

    try:
        workers = resolve_workers()
        rows = census(
            args.max_vertices,
            budget_seconds=args.budget_seconds,
            workers=workers,
            on_corollary_gap=report_gap,
        )
    except ValueError as exc:
        _error(str(exc))
        return EXIT_INPUT
    except BudgetError as exc:
        _error(str(exc))
        return EXIT_BUDGET
    except CounterexampleError as exc:
        _error(str(exc))
        return EXIT_VIOLATIONS
    sys.stdout.write(census_rows_to_csv(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crystalcheck",
        description="Validate, label, enumerate, and census 2-colored crystal graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    validate = sub.add_parser("validate", help="check a graph document against the axioms")
    validate.add_argument("input", help="path to a JSON graph document, or - for stdin")
    validate.add_argument("--mode", choices=("labels", "centers", "auto"), default="auto")
    validate.add_argument(
        "--no-require-connected", dest="require_connected", action="store_false",
        help="do not require weak connectivity",
    )
    validate.add_argument("--format", choices=("json", "text"), default="json")
    validate.set_defaults(func=_cmd_validate)

    infer = sub.add_parser("infer", help="list all labelings satisfying the local axioms")
    infer.add_argument("input", help="path to a JSON graph document, or - for stdin")
    infer.set_defaults(func=_cmd_infer)

    enumerate_cmd = sub.add_parser("enumerate", help="stream small graphs passing the filters")
    enumerate_cmd.add_argument("--max-vertices", type=int, required=True)
    enumerate_cmd.add_argument("--no-canonical", action="store_true",
                               help="emit all labeled graphs instead of canonical forms")
    enumerate_cmd.set_defaults(func=_cmd_enumerate)

    census_cmd = sub.add_parser("census", help="tabulate graphs, labelings, and markings per size")
    census_cmd.add_argument("--max-vertices", type=int, default=5)
    census_cmd.add_argument("--budget-seconds", type=float, default=None)
    census_cmd.set_defaults(func=_cmd_census)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CrystalCheckError as exc:
        # Anything not handled closer to its source is an input problem.
        _error(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
