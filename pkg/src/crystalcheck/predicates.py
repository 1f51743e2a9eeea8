"""Checkable structural predicates around central 1-edges and string words.

These are diagnostics, not axioms: the two corollary predicates are known to
follow from a larger axiom set than the one this package checks, so a graph
can satisfy every local axiom and still fail them.  Reports therefore carry
a three-valued status: ``holds``, ``fails``, or ``vacuous`` when the
predicate's hypothesis is never instantiated.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .axioms import LABEL_CENTRAL, LABEL_LEFT, LABEL_RIGHT, Labeling, check_local
from .errors import LabelingError, PreconditionError
from .graph import ColoredDigraph, StringDecomposition

HOLDS, FAILS, VACUOUS = "holds", "fails", "vacuous"

# Valid label words along a string: 0^a c 1^b (a,b >= 0) or 0^a 1^b
# (a,b >= 1) in color 1, and 1^a c 0^b (a,b >= 0) in color 2.
WORD_PATTERN_1 = re.compile(r"0*c1*|0+1+")
WORD_PATTERN_2 = re.compile(r"1*c0*")


@dataclass(frozen=True)
class PredicateReport:
    """Outcome of one predicate check.

    ``witnesses`` lists the hypothesis instances behind the status: the
    instances verified when the predicate holds, the offending instances
    when it fails, and nothing when it is vacuous.
    """

    predicate: str
    status: str
    witnesses: tuple

    @property
    def ok(self) -> bool:
        return self.status != FAILS

    def as_jsonable(self) -> dict:
        return {
            "predicate": self.predicate,
            "status": self.status,
            "witnesses": list(self.witnesses),
        }


def _require_local_validity(g: ColoredDigraph, lab: Labeling) -> None:
    report = check_local(g, lab)
    if report:
        raise PreconditionError(
            f"labeling violates the local axioms ({len(report)} violation(s)); "
            f"first: {report.entries[0].detail}"
        )


def _central_1_edges(g: ColoredDigraph, lab: Labeling) -> list:
    return [
        e for e in g.edges
        if e.color == 1
        and lab.labels[e.tail] == LABEL_LEFT
        and lab.labels[e.head] == LABEL_RIGHT
    ]


def check_corollary2(g: ColoredDigraph, lab: Labeling) -> PredicateReport:
    """For every central 1-edge (u, v): a 2-edge must enter u from a
    central vertex and a 2-edge must leave v toward a central vertex.

    Witnesses are [u, v] pairs.  Vacuous when no central 1-edge exists.
    """
    _require_local_validity(g, lab)
    central_edges = _central_1_edges(g, lab)
    if not central_edges:
        return PredicateReport(predicate="corollary2", status=VACUOUS, witnesses=())

    failing = []
    for e in central_edges:
        has_central_in = any(
            lab.labels[prev.tail] == LABEL_CENTRAL for prev in g.in_edges(e.tail, 2)
        )
        has_central_out = any(
            lab.labels[nxt.head] == LABEL_CENTRAL for nxt in g.out_edges(e.head, 2)
        )
        if not (has_central_in and has_central_out):
            failing.append(e)

    if failing:
        witnesses = tuple([e.tail, e.head] for e in failing)
        return PredicateReport(predicate="corollary2", status=FAILS, witnesses=witnesses)
    witnesses = tuple([e.tail, e.head] for e in central_edges)
    return PredicateReport(predicate="corollary2", status=HOLDS, witnesses=witnesses)


def check_corollary3(g: ColoredDigraph, lab: Labeling) -> PredicateReport:
    """For every central 1-edge (u, v) with a 2-edge (u, w) leaving u: some
    1-edge (w, w') must exist with w' central.

    Witnesses are [u, v, w] triples.  Vacuous when no central 1-edge has a
    leaving 2-edge at its tail.
    """
    _require_local_validity(g, lab)
    instances = []
    for e in _central_1_edges(g, lab):
        for via in g.out_edges(e.tail, 2):
            instances.append((e, via.head))
    if not instances:
        return PredicateReport(predicate="corollary3", status=VACUOUS, witnesses=())

    failing = []
    for e, w in instances:
        ok = any(lab.labels[nxt.head] == LABEL_CENTRAL for nxt in g.out_edges(w, 1))
        if not ok:
            failing.append((e, w))

    if failing:
        witnesses = tuple([e.tail, e.head, w] for e, w in failing)
        return PredicateReport(predicate="corollary3", status=FAILS, witnesses=witnesses)
    witnesses = tuple([e.tail, e.head, w] for e, w in instances)
    return PredicateReport(predicate="corollary3", status=HOLDS, witnesses=witnesses)


def string_word(string: tuple[str, ...], lab: Labeling) -> str:
    """The label word read along a string."""
    return "".join(lab.labels[v] for v in string)


def check_string_words(decomp: StringDecomposition, lab: Labeling) -> PredicateReport:
    """Check that every string's label word has the admissible shape.

    This is equivalent to the local axioms restricted to the string: each
    1-string word must match 0^a c 1^b (a,b >= 0) or 0^a 1^b (a,b >= 1),
    and each 2-string word must match 1^a c 0^b (a,b >= 0).  Witnesses
    identify strings as {"color": ..., "string": [...]}.
    """
    for string in decomp.strings:
        for v in string:
            if v not in lab.labels:
                raise LabelingError(f"labeling does not cover vertex {v!r}")
    pattern = WORD_PATTERN_1 if decomp.color == 1 else WORD_PATTERN_2

    failing = []
    for string in decomp.strings:
        if not pattern.fullmatch(string_word(string, lab)):
            failing.append(string)

    if failing:
        witnesses = tuple({"color": decomp.color, "string": list(s)} for s in failing)
        return PredicateReport(predicate="string-words", status=FAILS, witnesses=witnesses)
    witnesses = tuple({"color": decomp.color, "string": list(s)} for s in decomp.strings)
    return PredicateReport(predicate="string-words", status=HOLDS, witnesses=witnesses)
