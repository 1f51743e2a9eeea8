"""Central-element axioms for 2-colored string graphs, in two formulations.

The global axioms constrain a *central marking* (distinguished vertices and
1-edges): every 1-string carries exactly one central element, and every
2-string contains exactly one central vertex with only right vertices before
it and only left vertices after it.

The local axioms constrain a *labeling* of the vertices by {0, c, 1}: each
edge's label pair must come from a small per-color list, and endpoint
vertices of strings exclude certain labels.  For finite acyclic graphs
satisfying the degree axiom the two formulations pick out the same objects;
``labels_from_marking`` and ``marking_from_labels`` realize the bijection,
and the enumeration oracle verifies it exhaustively on small graphs.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .errors import (
    CentralityError,
    DegreeAxiomError,
    LabelingError,
    MarkingError,
    PreconditionError,
)
from .graph import ColoredDigraph, Edge, StringDecomposition, check_degree_axiom, decompose_strings
from .violations import (
    CLAUSE_B1,
    CLAUSE_B1_I,
    CLAUSE_B1_II,
    CLAUSE_B2,
    CLAUSE_B2_I,
    CLAUSE_B2_II,
    Violation,
    ViolationReport,
)

# Label alphabet in enumeration order: 0 < c < 1.
LABEL_LEFT = "0"
LABEL_CENTRAL = "c"
LABEL_RIGHT = "1"
LABEL_VALUES = (LABEL_LEFT, LABEL_CENTRAL, LABEL_RIGHT)

# Admissible (tail, head) label pairs per edge color.
ALLOWED_PAIRS_1 = frozenset(
    [("0", "0"), ("0", "c"), ("0", "1"), ("c", "1"), ("1", "1")]
)
ALLOWED_PAIRS_2 = frozenset(
    [("1", "1"), ("1", "c"), ("c", "0"), ("0", "0")]
)

# Classification of edges by their label pair.
EDGE_CLASS_1 = {
    ("0", "0"): "left",
    ("0", "c"): "left",
    ("0", "1"): "central",
    ("c", "1"): "right",
    ("1", "1"): "right",
}
EDGE_CLASS_2 = {
    ("c", "0"): "left",
    ("0", "0"): "left",
    ("1", "1"): "right",
    ("1", "c"): "right",
}

LEFT, CENTRAL, RIGHT = "left", "central", "right"


@dataclass(frozen=True)
class Labeling:
    """A total map from vertices to the label alphabet {0, c, 1}."""

    labels: Mapping[str, str]

    def vector(self, g: ColoredDigraph) -> tuple[str, ...]:
        """Label values in the graph's declared vertex order."""
        return tuple(self.labels[v] for v in g.vertices)

    def as_jsonable(self, g: ColoredDigraph) -> dict:
        return {v: self.labels[v] for v in g.vertices}


@dataclass(frozen=True)
class CentralMarking:
    """Distinguished central vertices and central 1-edges."""

    central_vertices: frozenset[str]
    central_1_edges: frozenset[tuple[str, str]]

    def as_jsonable(self, g: ColoredDigraph) -> dict:
        return {
            "vertices": sorted(self.central_vertices, key=g.vertex_index),
            "edges_1": sorted(
                (list(pair) for pair in self.central_1_edges),
                key=lambda pair: g.edge_index(pair[0], pair[1], 1),
            ),
        }


@dataclass(frozen=True)
class VertexClass:
    """Total classification of vertices as left, central, or right."""

    classes: Mapping[str, str]


def _require_total(g: ColoredDigraph, lab: Labeling) -> None:
    keys = set(lab.labels)
    declared = set(g.vertices)
    if keys != declared:
        missing = sorted(declared - keys)
        extra = sorted(keys - declared)
        raise LabelingError(
            f"labeling must be total on the vertex set; missing {missing}, extraneous {extra}"
        )


def _check_marking_scope(g: ColoredDigraph, marking: CentralMarking) -> None:
    for v in sorted(marking.central_vertices):
        if not g.has_vertex(v):
            raise MarkingError(f"central vertex {v!r} is not in the graph")
    for tail, head in sorted(marking.central_1_edges):
        if not g.has_edge(tail, head, 1):
            raise MarkingError(f"central edge ({tail!r}, {head!r}) is not a 1-edge of the graph")


def _central_elements_on_string(
    string: tuple[str, ...], marking: CentralMarking
) -> list[tuple[str, int]]:
    """Find central elements along one 1-string.

    Returns ("vertex", k) for a central vertex at offset k and ("edge", k)
    for a central edge whose tail sits at offset k, in string order.
    """
    elements = []
    for k, v in enumerate(string):
        if v in marking.central_vertices:
            elements.append(("vertex", k))
        if k + 1 < len(string) and (string[k], string[k + 1]) in marking.central_1_edges:
            elements.append(("edge", k))
    return elements


def classify_vertices(decomp1: StringDecomposition, marking: CentralMarking) -> VertexClass:
    """Classify every vertex from its position relative to the central
    element of its 1-string.

    A central vertex is central; vertices before it are left and after it
    are right.  For a central edge, its tail and everything before are left,
    its head and everything after are right.
    """
    if decomp1.color != 1:
        raise ValueError("classification is defined over the color-1 decomposition")
    consecutive = {
        (s[k], s[k + 1]) for s in decomp1.strings for k in range(len(s) - 1)
    }
    for v in sorted(marking.central_vertices):
        if not decomp1.covers(v):
            raise MarkingError(f"central vertex {v!r} is not covered by the decomposition")
    for pair in sorted(marking.central_1_edges):
        if pair not in consecutive:
            raise MarkingError(f"central edge {pair} is not an edge of any 1-string")

    classes: dict[str, str] = {}
    for string in decomp1.strings:
        elements = _central_elements_on_string(string, marking)
        if len(elements) != 1:
            raise CentralityError(string, len(elements))
        kind, k = elements[0]
        if kind == "vertex":
            for v in string[:k]:
                classes[v] = LEFT
            classes[string[k]] = CENTRAL
            for v in string[k + 1:]:
                classes[v] = RIGHT
        else:
            for v in string[:k + 1]:
                classes[v] = LEFT
            for v in string[k + 1:]:
                classes[v] = RIGHT
    return VertexClass(classes=classes)


def check_global(g: ColoredDigraph, marking: CentralMarking) -> ViolationReport:
    """Check the global axioms (B1) and (B2) for a central marking.

    (B1): each 1-string carries exactly one central element (vertex or
    1-edge).  (B2): each 2-string contains exactly one central vertex; all
    vertices before it must be right and all after it left, where left/right
    comes from the 1-string classification.  Positions on 1-strings that
    themselves violate (B1) have no classification, so only (B1) is reported
    for them.
    """
    _check_marking_scope(g, marking)
    decomp1 = decompose_strings(g, 1)
    decomp2 = decompose_strings(g, 2)

    violations: list[Violation] = []
    classes: dict[str, str] = {}
    for string in decomp1.strings:
        elements = _central_elements_on_string(string, marking)
        if len(elements) != 1:
            violations.append(Violation(
                clause=CLAUSE_B1,
                at=string[0],
                detail=(
                    f"1-string {list(string)} carries {len(elements)} central elements, "
                    f"expected exactly 1"
                ),
            ))
            continue
        kind, k = elements[0]
        if kind == "vertex":
            for v in string[:k]:
                classes[v] = LEFT
            classes[string[k]] = CENTRAL
            for v in string[k + 1:]:
                classes[v] = RIGHT
        else:
            for v in string[:k + 1]:
                classes[v] = LEFT
            for v in string[k + 1:]:
                classes[v] = RIGHT

    for string in decomp2.strings:
        central_offsets = [k for k, v in enumerate(string) if v in marking.central_vertices]
        if len(central_offsets) != 1:
            violations.append(Violation(
                clause=CLAUSE_B2,
                at=string[0],
                detail=(
                    f"2-string {list(string)} contains {len(central_offsets)} central "
                    f"vertices, expected exactly 1"
                ),
            ))
            continue
        k = central_offsets[0]
        for j in range(k):
            cls = classes.get(string[j])
            if cls is not None and cls != RIGHT:
                violations.append(Violation(
                    clause=CLAUSE_B2,
                    at=string[j],
                    detail=(
                        f"vertex {string[j]!r} lies before the central vertex "
                        f"{string[k]!r} on its 2-string but is {cls}, not right"
                    ),
                ))
        for j in range(k + 1, len(string)):
            cls = classes.get(string[j])
            if cls is not None and cls != LEFT:
                violations.append(Violation(
                    clause=CLAUSE_B2,
                    at=string[j],
                    detail=(
                        f"vertex {string[j]!r} lies after the central vertex "
                        f"{string[k]!r} on its 2-string but is {cls}, not left"
                    ),
                ))

    return ViolationReport.build(g, violations)


def check_local(g: ColoredDigraph, lab: Labeling) -> ViolationReport:
    """Check the local label axioms (B1(i)), (B1(ii)), (B2(i)), (B2(ii)).

    Edge clauses restrict each edge's (tail, head) label pair to the
    admissible per-color list; endpoint clauses forbid label 1 without an
    entering 1-edge or a leaving 2-edge, and label 0 without a leaving
    1-edge or an entering 2-edge.  One violation is recorded per clause
    instance.
    """
    _require_total(g, lab)
    labels = lab.labels
    violations: list[Violation] = []

    for e in g.edges:
        pair = (labels[e.tail], labels[e.head])
        if e.color == 1:
            if pair not in ALLOWED_PAIRS_1:
                violations.append(Violation(
                    clause=CLAUSE_B1_I,
                    at=e.triple(),
                    detail=f"1-edge {e.triple()} has label pair {pair}, not an admissible pair",
                ))
        else:
            if pair not in ALLOWED_PAIRS_2:
                violations.append(Violation(
                    clause=CLAUSE_B2_I,
                    at=e.triple(),
                    detail=f"2-edge {e.triple()} has label pair {pair}, not an admissible pair",
                ))

    for v in g.vertices:
        value = labels[v]
        if value == LABEL_RIGHT:
            if not g.in_edges(v, 1):
                violations.append(Violation(
                    clause=CLAUSE_B1_II,
                    at=v,
                    detail=f"vertex {v!r} has no entering 1-edge, so its label must not be 1",
                ))
            if not g.out_edges(v, 2):
                violations.append(Violation(
                    clause=CLAUSE_B2_II,
                    at=v,
                    detail=f"vertex {v!r} has no leaving 2-edge, so its label must not be 1",
                ))
        elif value == LABEL_LEFT:
            if not g.out_edges(v, 1):
                violations.append(Violation(
                    clause=CLAUSE_B1_II,
                    at=v,
                    detail=f"vertex {v!r} has no leaving 1-edge, so its label must not be 0",
                ))
            if not g.in_edges(v, 2):
                violations.append(Violation(
                    clause=CLAUSE_B2_II,
                    at=v,
                    detail=f"vertex {v!r} has no entering 2-edge, so its label must not be 0",
                ))

    return ViolationReport.build(g, violations)


def classify_edges(g: ColoredDigraph, lab: Labeling) -> dict[Edge, str]:
    """Classify each edge as left, central, or right by its label pair.

    1-edges take all three classes; 2-edges are only ever left or right.
    Requires a labeling that passes the local checks.
    """
    _require_total(g, lab)
    result: dict[Edge, str] = {}
    for e in g.edges:
        pair = (lab.labels[e.tail], lab.labels[e.head])
        table = EDGE_CLASS_1 if e.color == 1 else EDGE_CLASS_2
        cls = table.get(pair)
        if cls is None:
            raise PreconditionError(
                f"edge {e.triple()} has label pair {pair} outside the admissible lists"
            )
        result[e] = cls
    return result


def labels_from_marking(g: ColoredDigraph, marking: CentralMarking) -> Labeling:
    """Convert a globally-valid marking into its labeling.

    Left vertices map to 0, central vertices to c, right vertices to 1.
    """
    report = check_global(g, marking)
    if report:
        raise PreconditionError(
            f"marking violates the global axioms ({len(report)} violation(s)); "
            f"first: {report.entries[0].detail}"
        )
    classes = classify_vertices(decompose_strings(g, 1), marking)
    to_label = {LEFT: LABEL_LEFT, CENTRAL: LABEL_CENTRAL, RIGHT: LABEL_RIGHT}
    return Labeling(labels={v: to_label[classes.classes[v]] for v in g.vertices})


def marking_from_labels(g: ColoredDigraph, lab: Labeling) -> CentralMarking:
    """Read the central marking off a locally-valid labeling.

    Central vertices are those labeled c; central 1-edges are the 1-edges
    with label pair (0, 1).
    """
    report = check_local(g, lab)
    if report:
        raise PreconditionError(
            f"labeling violates the local axioms ({len(report)} violation(s)); "
            f"first: {report.entries[0].detail}"
        )
    labels = lab.labels
    central_vertices = frozenset(v for v in g.vertices if labels[v] == LABEL_CENTRAL)
    central_edges = frozenset(
        (e.tail, e.head)
        for e in g.edges
        if e.color == 1 and labels[e.tail] == LABEL_LEFT and labels[e.head] == LABEL_RIGHT
    )
    return CentralMarking(central_vertices=central_vertices, central_1_edges=central_edges)


# -- label inference ------------------------------------------------------

def _unary_domains(g: ColoredDigraph) -> dict[str, set[str]]:
    """Per-vertex label domains from the endpoint clauses alone."""
    domains = {}
    for v in g.vertices:
        dom = set(LABEL_VALUES)
        if not g.in_edges(v, 1):
            dom.discard(LABEL_RIGHT)
        if not g.out_edges(v, 1):
            dom.discard(LABEL_LEFT)
        if not g.in_edges(v, 2):
            dom.discard(LABEL_LEFT)
        if not g.out_edges(v, 2):
            dom.discard(LABEL_RIGHT)
        domains[v] = dom
    return domains


def _propagate(g: ColoredDigraph, domains: dict[str, set[str]]) -> bool:
    """Prune domains to arc consistency along every edge constraint.

    Returns False as soon as some domain empties (no labeling exists).
    """
    incident: dict[str, list[Edge]] = {v: [] for v in g.vertices}
    for e in g.edges:
        incident[e.tail].append(e)
        incident[e.head].append(e)

    queue = deque(g.edges)
    queued = set(g.edges)
    while queue:
        e = queue.popleft()
        queued.discard(e)
        allowed = ALLOWED_PAIRS_1 if e.color == 1 else ALLOWED_PAIRS_2
        tail_dom, head_dom = domains[e.tail], domains[e.head]
        new_tail = {a for a in tail_dom if any((a, b) in allowed for b in head_dom)}
        new_head = {b for b in head_dom if any((a, b) in allowed for a in tail_dom)}
        for v, new in ((e.tail, new_tail), (e.head, new_head)):
            if new != domains[v]:
                domains[v] = new
                if not new:
                    return False
                for other in incident[v]:
                    if other not in queued:
                        queue.append(other)
                        queued.add(other)
    return True


def infer_labelings(g: ColoredDigraph) -> list[Labeling]:
    """Enumerate every labeling satisfying the local axioms.

    Domains are first narrowed by the endpoint clauses and arc-consistency
    propagation along the strings; the survivors are then searched
    exhaustively.  Results come in lexicographic order of the label vector
    under declared vertex order with 0 < c < 1.
    """
    degree_report = check_degree_axiom(g)
    if degree_report:
        raise DegreeAxiomError(
            f"graph violates (B0) at {degree_report.entries[0].at!r}; labelings are undefined"
        )

    domains = _unary_domains(g)
    if any(not dom for dom in domains.values()):
        return []
    if not _propagate(g, domains):
        return []

    # Constraints from each vertex back to already-assigned vertices, given
    # the declared assignment order.
    order = g.vertices
    rank = {v: i for i, v in enumerate(order)}
    backward: dict[str, list[tuple[str, frozenset, bool]]] = {v: [] for v in order}
    for e in g.edges:
        allowed = ALLOWED_PAIRS_1 if e.color == 1 else ALLOWED_PAIRS_2
        if rank[e.tail] < rank[e.head]:
            backward[e.head].append((e.tail, allowed, False))
        else:
            backward[e.tail].append((e.head, allowed, True))

    results: list[Labeling] = []
    assignment: dict[str, str] = {}

    def extend(k: int) -> None:
        if k == len(order):
            results.append(Labeling(labels=dict(assignment)))
            return
        v = order[k]
        for value in LABEL_VALUES:
            if value not in domains[v]:
                continue
            ok = True
            for other, allowed, v_is_tail in backward[v]:
                pair = (value, assignment[other]) if v_is_tail else (assignment[other], value)
                if pair not in allowed:
                    ok = False
                    break
            if ok:
                assignment[v] = value
                extend(k + 1)
                del assignment[v]

    extend(0)
    return results


def infer_labelings_exhaustive(g: ColoredDigraph) -> list[Labeling]:
    """Brute-force reference for ``infer_labelings``: try all 3^|V| vectors.

    Kept deliberately naive so the two routes can cross-check each other.
    """
    degree_report = check_degree_axiom(g)
    if degree_report:
        raise DegreeAxiomError(
            f"graph violates (B0) at {degree_report.entries[0].at!r}; labelings are undefined"
        )
    results = []
    for combo in itertools.product(LABEL_VALUES, repeat=g.n_vertices):
        lab = Labeling(labels=dict(zip(g.vertices, combo)))
        if not check_local(g, lab):
            results.append(lab)
    return results
