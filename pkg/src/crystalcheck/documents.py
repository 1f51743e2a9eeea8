"""JSON graph documents: parsing, validation, and serialization.

The document format is a single JSON object:

    {
      "vertices": ["a", "b", ...],
      "edges":    [{"from": "a", "to": "b", "color": 1}, ...],
      "labels":   {"a": "c", ...},                        # optional
      "centers":  {"vertices": ["a"], "edges_1": [["a","b"]]}  # optional
    }

Unknown top-level keys are rejected.  Every reject carries a distinct error
kind plus a location, so callers can report precisely what was wrong.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Union

from .axioms import LABEL_VALUES, CentralMarking, Labeling
from .errors import DocumentError
from .graph import ColoredDigraph, Edge

_TOP_LEVEL_KEYS = ("vertices", "edges", "labels", "centers")
_EDGE_KEYS = {"from", "to", "color"}
_CENTERS_KEYS = {"vertices", "edges_1"}


@dataclass(frozen=True)
class GraphDocument:
    """A parsed document: the graph plus whatever annotations it carried."""

    graph: ColoredDigraph
    labels: Optional[Labeling] = None
    marking: Optional[CentralMarking] = None


def _require_str_list(value, kind: str, location: str) -> list[str]:
    if not isinstance(value, list) or any(not isinstance(x, str) for x in value):
        raise DocumentError(kind, location, "expected an array of strings")
    return value


def parse_document(data: Union[bytes, str]) -> GraphDocument:
    """Parse and validate a JSON graph document."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError("malformed-syntax", "<document>", f"not valid UTF-8: {exc}") from exc
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            "malformed-syntax", f"line {exc.lineno} column {exc.colno}", exc.msg
        ) from exc

    if not isinstance(raw, dict):
        raise DocumentError("invalid-structure", "<document>", "top level must be a JSON object")
    for key in raw:
        if key not in _TOP_LEVEL_KEYS:
            raise DocumentError("unknown-key", key, f"unknown top-level key {key!r}")
    for key in ("vertices", "edges"):
        if key not in raw:
            raise DocumentError("invalid-structure", key, f"missing required key {key!r}")

    vertices = _require_str_list(raw["vertices"], "invalid-structure", "vertices")
    if not vertices:
        raise DocumentError("empty-vertex-set", "vertices", "a graph must declare at least one vertex")
    declared = set()
    for i, v in enumerate(vertices):
        if v in declared:
            raise DocumentError("duplicate-vertex", f"vertices[{i}]", f"vertex {v!r} declared twice")
        declared.add(v)

    if not isinstance(raw["edges"], list):
        raise DocumentError("invalid-structure", "edges", "expected an array of edge objects")
    edges: list[Edge] = []
    seen_triples = set()
    for i, item in enumerate(raw["edges"]):
        loc = f"edges[{i}]"
        if not isinstance(item, dict):
            raise DocumentError("invalid-structure", loc, "edge must be an object")
        if set(item) != _EDGE_KEYS:
            raise DocumentError(
                "invalid-structure", loc,
                f"edge object must have exactly the keys {sorted(_EDGE_KEYS)}",
            )
        tail, head, color = item["from"], item["to"], item["color"]
        if not isinstance(tail, str) or not isinstance(head, str):
            raise DocumentError("invalid-structure", loc, "'from' and 'to' must be strings")
        # bool is an int subclass; reject it explicitly.
        if isinstance(color, bool) or not isinstance(color, int) or color not in (1, 2):
            raise DocumentError("unknown-color", loc, f"color must be 1 or 2, got {color!r}")
        for endpoint in (tail, head):
            if endpoint not in declared:
                raise DocumentError("dangling-endpoint", loc, f"undeclared vertex {endpoint!r}")
        if tail == head:
            raise DocumentError("self-loop", loc, f"self-loop at {tail!r}")
        triple = (tail, head, color)
        if triple in seen_triples:
            raise DocumentError("duplicate-edge", loc, f"duplicate edge {triple}")
        seen_triples.add(triple)
        edges.append(Edge(tail=tail, head=head, color=color))

    graph = ColoredDigraph(vertices=tuple(vertices), edges=tuple(edges))

    labels = None
    if "labels" in raw:
        labels = _parse_labels(raw["labels"], graph)
    marking = None
    if "centers" in raw:
        marking = _parse_centers(raw["centers"], graph)
    return GraphDocument(graph=graph, labels=labels, marking=marking)


def _parse_labels(raw, graph: ColoredDigraph) -> Labeling:
    if not isinstance(raw, dict):
        raise DocumentError("invalid-labels", "labels", "expected an object mapping vertex to label")
    for v, value in raw.items():
        if not graph.has_vertex(v):
            raise DocumentError("invalid-labels", f"labels.{v}", f"label for undeclared vertex {v!r}")
        if value not in LABEL_VALUES:
            raise DocumentError(
                "invalid-labels", f"labels.{v}",
                f"label must be one of {list(LABEL_VALUES)}, got {value!r}",
            )
    missing = [v for v in graph.vertices if v not in raw]
    if missing:
        raise DocumentError(
            "invalid-labels", "labels", f"labels must cover every vertex; missing {missing}"
        )
    return Labeling(labels={v: raw[v] for v in graph.vertices})


def _parse_centers(raw, graph: ColoredDigraph) -> CentralMarking:
    if not isinstance(raw, dict):
        raise DocumentError("invalid-centers", "centers", "expected an object")
    for key in raw:
        if key not in _CENTERS_KEYS:
            raise DocumentError("invalid-centers", f"centers.{key}", f"unknown key {key!r}")

    central_vertices = _require_str_list(raw.get("vertices", []), "invalid-centers", "centers.vertices")
    seen_v = set()
    for i, v in enumerate(central_vertices):
        loc = f"centers.vertices[{i}]"
        if not graph.has_vertex(v):
            raise DocumentError("invalid-centers", loc, f"undeclared vertex {v!r}")
        if v in seen_v:
            raise DocumentError("invalid-centers", loc, f"vertex {v!r} listed twice")
        seen_v.add(v)

    raw_edges = raw.get("edges_1", [])
    if not isinstance(raw_edges, list):
        raise DocumentError("invalid-centers", "centers.edges_1", "expected an array of [tail, head] pairs")
    central_edges = set()
    for i, pair in enumerate(raw_edges):
        loc = f"centers.edges_1[{i}]"
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or any(not isinstance(x, str) for x in pair)
        ):
            raise DocumentError("invalid-centers", loc, "expected a [tail, head] pair of strings")
        tail, head = pair
        if not graph.has_edge(tail, head, 1):
            raise DocumentError(
                "invalid-centers", loc, f"({tail!r}, {head!r}) is not a declared 1-edge"
            )
        if (tail, head) in central_edges:
            raise DocumentError("invalid-centers", loc, f"edge ({tail!r}, {head!r}) listed twice")
        central_edges.add((tail, head))

    return CentralMarking(
        central_vertices=frozenset(seen_v),
        central_1_edges=frozenset(central_edges),
    )


def parse_graph(data: Union[bytes, str]) -> ColoredDigraph:
    """Parse a document and return just its graph."""
    return parse_document(data).graph


def document_from_graph(
    g: ColoredDigraph,
    labels: Optional[Labeling] = None,
    marking: Optional[CentralMarking] = None,
) -> dict:
    """Build the JSON-ready document for a graph and optional annotations.

    All collections follow declared order, so the output is deterministic.
    """
    doc: dict = {
        "vertices": list(g.vertices),
        "edges": [{"from": e.tail, "to": e.head, "color": e.color} for e in g.edges],
    }
    if labels is not None:
        doc["labels"] = {v: labels.labels[v] for v in g.vertices}
    if marking is not None:
        doc["centers"] = {
            "vertices": sorted(marking.central_vertices, key=g.vertex_index),
            "edges_1": sorted(
                (list(pair) for pair in marking.central_1_edges),
                key=lambda pair: g.edge_index(pair[0], pair[1], 1),
            ),
        }
    return doc


def dumps_document(doc: dict, compact: bool = False) -> str:
    if compact:
        return json.dumps(doc, separators=(",", ":"))
    return json.dumps(doc, indent=2)


def serialize_graph(
    g: ColoredDigraph,
    labels: Optional[Labeling] = None,
    marking: Optional[CentralMarking] = None,
) -> bytes:
    """Serialize to the document format; parsing the result round-trips."""
    return dumps_document(document_from_graph(g, labels, marking)).encode("utf-8")
