#!/usr/bin/env python3
"""Search the small-graph universe for valid labelings on which the
corollary predicates fail.

The local axioms checked by this package are a strict subset of the full
axiom system under which the corollaries are provable, so failures are
expected to exist; this script finds and prints the smallest witnesses.

Example:
    python scripts/find_corollary_gaps.py --max-vertices 5
"""

from __future__ import annotations

import argparse
import sys

from crystalcheck import (
    GraphStream,
    check_corollary2,
    check_corollary3,
    enumerate_graphs,
    infer_labelings,
)
from crystalcheck.documents import document_from_graph, dumps_document


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-vertices", type=int, default=5)
    parser.add_argument("--predicate", choices=("corollary2", "corollary3", "both"),
                        default="both")
    args = parser.parse_args()

    checkers = {
        "corollary2": check_corollary2,
        "corollary3": check_corollary3,
    }
    if args.predicate != "both":
        checkers = {args.predicate: checkers[args.predicate]}

    found = 0
    scanned_graphs = 0
    scanned_labelings = 0
    for g in enumerate_graphs(GraphStream(max_vertices=args.max_vertices)):
        scanned_graphs += 1
        for lab in infer_labelings(g):
            scanned_labelings += 1
            for name, checker in checkers.items():
                report = checker(g, lab)
                if report.status == "fails":
                    found += 1
                    doc = document_from_graph(g, labels=lab)
                    doc["gap"] = name
                    doc["witnesses"] = list(report.witnesses)
                    print(dumps_document(doc, compact=True))
    print(
        f"# scanned {scanned_graphs} graphs / {scanned_labelings} valid labelings; "
        f"{found} gap(s) found",
        file=sys.stderr,
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
