"""Labeled directed graph for RDFS vocabulary.

Nodes are interned IRIs (one node per distinct IRI); edges carry one of four
kinds, abbreviated s/t/d/r: SubClassOf, Type, Domain, Range.  SubClassOf edges
point from the subclass to its parent.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .hypergraph import UnknownNodeError

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"

RDF_TYPE = RDF_NS + "type"
RDF_PROPERTY = RDF_NS + "Property"
RDF_STATEMENT = RDF_NS + "Statement"
RDF_SUBJECT = RDF_NS + "subject"
RDF_PREDICATE = RDF_NS + "predicate"
RDF_OBJECT = RDF_NS + "object"
RDF_DATATYPE = RDF_NS + "datatype"

RDFS_RESOURCE = RDFS_NS + "Resource"
RDFS_CLASS = RDFS_NS + "Class"
RDFS_LITERAL = RDFS_NS + "Literal"
RDFS_SUBCLASSOF = RDFS_NS + "subClassOf"
RDFS_DOMAIN = RDFS_NS + "domain"
RDFS_RANGE = RDFS_NS + "range"

#: Every IRI pre-interned by load_builtin_vocabulary, in interning order.
BUILTIN_VOCABULARY = (
    RDFS_RESOURCE,
    RDFS_CLASS,
    RDFS_LITERAL,
    RDF_PROPERTY,
    RDF_STATEMENT,
    RDF_TYPE,
    RDFS_SUBCLASSOF,
    RDFS_DOMAIN,
    RDFS_RANGE,
    RDF_SUBJECT,
    RDF_PREDICATE,
    RDF_OBJECT,
    RDF_DATATYPE,
)

#: Builtin classes that sit directly under the hierarchy root.
_ROOTED_CLASSES = (RDFS_CLASS, RDFS_LITERAL, RDF_PROPERTY, RDF_STATEMENT)


class EdgeKind(Enum):
    SUBCLASS_OF = "s"
    TYPE = "t"
    DOMAIN = "d"
    RANGE = "r"


@dataclass(frozen=True)
class GraphEdge:
    src: int
    dst: int
    kind: EdgeKind


class SchemaGraph:
    """Interned IRI nodes plus deduplicated, insertion-ordered labeled edges."""

    def __init__(self) -> None:
        self.iris: list[str] = []
        self._ids: dict[str, int] = {}
        self.edges: list[GraphEdge] = []
        self._edge_set: set[GraphEdge] = set()
        self._subclass_children: dict[int, list[int]] = {}
        self.frozen = False

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchemaGraph):
            return NotImplemented
        return self.iris == other.iris and self.edges == other.edges

    @property
    def node_count(self) -> int:
        return len(self.iris)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def _check_mutable(self) -> None:
        if self.frozen:
            raise RuntimeError("schema graph is frozen")

    def _check_node(self, node: int) -> None:
        if not 0 <= node < len(self.iris):
            raise UnknownNodeError(node)

    def freeze(self) -> None:
        self.frozen = True

    def intern(self, iri: str) -> int:
        """Return the node id for ``iri``, creating it on first sight."""
        existing = self._ids.get(iri)
        if existing is not None:
            return existing
        self._check_mutable()
        node_id = len(self.iris)
        self.iris.append(iri)
        self._ids[iri] = node_id
        return node_id

    def find(self, iri: str) -> int | None:
        return self._ids.get(iri)

    def iri_of(self, node: int) -> str:
        self._check_node(node)
        return self.iris[node]

    def add_edge(self, src: int, dst: int, kind: EdgeKind) -> bool:
        """Record an edge; exact duplicates are dropped.  Returns True if new."""
        self._check_mutable()
        self._check_node(src)
        self._check_node(dst)
        edge = GraphEdge(src, dst, kind)
        if edge in self._edge_set:
            return False
        self.edges.append(edge)
        self._edge_set.add(edge)
        if kind is EdgeKind.SUBCLASS_OF:
            self._subclass_children.setdefault(dst, []).append(src)
        return True

    def subclass_closure(self, node: int) -> set[int]:
        """The class itself plus all its SubClassOf descendants; cycle-safe."""
        self._check_node(node)
        closure = {node}
        stack = [node]
        while stack:
            for child in self._subclass_children.get(stack.pop(), ()):
                if child not in closure:
                    closure.add(child)
                    stack.append(child)
        return closure

    def constraint_of(self, node: int, kind: EdgeKind) -> int | None:
        """Target of the first Domain or Range edge out of ``node``, if any."""
        if kind not in (EdgeKind.DOMAIN, EdgeKind.RANGE):
            raise ValueError("constraint_of answers Domain or Range lookups only")
        self._check_node(node)
        for edge in self.edges:
            if edge.src == node and edge.kind is kind:
                return edge.dst
        return None


def load_builtin_vocabulary() -> SchemaGraph:
    """A fresh graph holding the built-in RDF/RDFS vocabulary.

    All anchor nodes needed by connector generation pre-exist here, and the
    four builtin classes are placed under the hierarchy root.
    """
    graph = SchemaGraph()
    for iri in BUILTIN_VOCABULARY:
        graph.intern(iri)
    root = graph.intern(RDFS_RESOURCE)
    for iri in _ROOTED_CLASSES:
        graph.add_edge(graph.intern(iri), root, EdgeKind.SUBCLASS_OF)
    return graph
