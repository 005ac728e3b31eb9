"""Integration engine: stratify statements and build the two-layer structure.

Routing is purely syntactic.  A statement goes to the schema layer when its
predicate is one of the four vocabulary properties (rdfs:subClassOf, rdf:type,
rdfs:domain, rdfs:range) *and* both subject and object are IRIs; everything
else — including rdf:type with a blank or literal participant — stays in the
instance layer.  Instance statements become hyperedges with the predicate as
the single head node and subject/object as tail positions 0/1; schema
statements become labeled edges in the graph layer.

Connector generation then ties the layers together: every hyperedge anchors to
rdf:Statement, role occurrences anchor to rdf:subject / rdf:predicate /
rdf:object, datatyped literals to rdf:datatype, and typed instance nodes to
their class node.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .hg2 import (
    HG2,
    EdgeConnector,
    NodeConnector,
    NodePayload,
    PayloadKind,
    Violation,
)
from .hypergraph import Occurrence, UnknownNodeError
from .ntriples import BlankLabel, IriRef, Literal, Statement, Term
from .schema import (
    RDF_DATATYPE,
    RDF_OBJECT,
    RDF_PREDICATE,
    RDF_STATEMENT,
    RDF_SUBJECT,
    RDF_TYPE,
    RDFS_DOMAIN,
    RDFS_LITERAL,
    RDFS_RANGE,
    RDFS_SUBCLASSOF,
    EdgeKind,
    SchemaGraph,
    load_builtin_vocabulary,
)


class Layer(Enum):
    SCHEMA = "schema"
    INSTANCE = "instance"


#: Vocabulary predicates that may route a statement to the graph layer,
#: with the edge kind each one produces there.
SCHEMA_PREDICATES: dict[str, EdgeKind] = {
    RDFS_SUBCLASSOF: EdgeKind.SUBCLASS_OF,
    RDF_TYPE: EdgeKind.TYPE,
    RDFS_DOMAIN: EdgeKind.DOMAIN,
    RDFS_RANGE: EdgeKind.RANGE,
}

#: Graph nodes that must exist before connectors can be generated.
ANCHOR_IRIS = (RDF_STATEMENT, RDF_SUBJECT, RDF_PREDICATE, RDF_OBJECT, RDF_DATATYPE)


class MissingAnchorError(LookupError):
    """A built-in anchor node is absent from the graph layer."""


def route_statement(statement: Statement) -> Layer:
    """Decide which layer a statement belongs to."""
    if (
        isinstance(statement.subject, IriRef)
        and isinstance(statement.object, IriRef)
        and statement.predicate.value in SCHEMA_PREDICATES
    ):
        return Layer.SCHEMA
    return Layer.INSTANCE


def payload_for(term: Term) -> NodePayload:
    """Hypernode payload carrying the given term."""
    if isinstance(term, IriRef):
        return NodePayload.uri(term.value)
    if isinstance(term, BlankLabel):
        return NodePayload.blank(term.label)
    if isinstance(term, Literal):
        datatype = term.datatype.value if term.datatype is not None else None
        return NodePayload.literal(term.lexical_form, term.language_tag, datatype)
    raise TypeError(f"not an RDF term: {term!r}")


def term_of(payload: NodePayload) -> Term:
    """Inverse of payload_for; raises ValueError on incomplete payloads."""
    if payload.kind is PayloadKind.URI:
        if payload.iri is None:
            raise ValueError("uri payload without an iri")
        return IriRef(payload.iri)
    if payload.kind is PayloadKind.BLANK:
        if payload.blank_label is None:
            raise ValueError("blank payload without a label")
        return BlankLabel(payload.blank_label)
    if payload.lexical_form is None:
        raise ValueError("literal payload without a lexical form")
    datatype = IriRef(payload.datatype_iri) if payload.datatype_iri is not None else None
    return Literal(payload.lexical_form, payload.language_tag, datatype)


class Interner:
    """Shared term and edge-shape tables for one build.

    Hands out one hypernode per distinct term (literals optionally exempt)
    and one hyperedge per distinct (head ids, tail ids) shape, so feeding the
    same statements twice leaves the structure unchanged.
    """

    def __init__(self, hg2: HG2, dedupe_literals: bool = True):
        self.hg2 = hg2
        self.dedupe_literals = dedupe_literals
        self._edge_ids: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
        for edge in hg2.h.edges:
            self._edge_ids.setdefault((tuple(edge.head), tuple(edge.tail)), edge.id)

    def node_for(self, term: Term) -> int:
        payload = payload_for(term)
        intern = self.dedupe_literals or not isinstance(term, Literal)
        return self.hg2.add_node(payload, intern=intern)

    def edge_for(self, head: list[int], tail: list[int]) -> int:
        key = (tuple(head), tuple(tail))
        existing = self._edge_ids.get(key)
        if existing is not None:
            return existing
        edge_id = self.hg2.h.add_hyperedge(head, tail)
        self._edge_ids[key] = edge_id
        return edge_id


def map_statement(statement: Statement, interner: Interner) -> int:
    """Record an instance statement as a hyperedge; returns its id.

    The predicate becomes the sole head node; the subject and object become
    tail positions 0 and 1.  Terms are interned, so a repeated statement
    returns the existing hyperedge.
    """
    subject = interner.node_for(statement.subject)
    predicate = interner.node_for(statement.predicate)
    objekt = interner.node_for(statement.object)
    return interner.edge_for([predicate], [subject, objekt])


def statement_of(hg2: HG2, edge_id: int) -> Statement | None:
    """Reconstruct the statement a hyperedge encodes, if it is statement-shaped.

    Returns None for hyperedges that were not produced by map_statement
    (wrong arity, opaque payloads, or payloads that do not form valid terms).
    """
    if not 0 <= edge_id < hg2.h.edge_count:
        return None
    edge = hg2.h.edges[edge_id]
    if len(edge.head) != 1 or len(edge.tail) != 2:
        return None
    payloads = [hg2.h.nodes[n] for n in (edge.tail[0], edge.head[0], edge.tail[1])]
    if not all(isinstance(p, NodePayload) for p in payloads):
        return None
    try:
        subject, predicate, objekt = (term_of(p) for p in payloads)
    except ValueError:
        return None
    if not isinstance(predicate, IriRef):
        return None
    if isinstance(subject, Literal):
        return None
    return Statement(subject, predicate, objekt)


def map_schema_statement(statement: Statement, graph: SchemaGraph) -> bool:
    """Record a schema statement as a labeled graph edge (subject → object).

    For rdfs:subClassOf this realizes the child → parent direction.  Returns
    True when a new edge was added, False on an exact duplicate.
    """
    kind = SCHEMA_PREDICATES[statement.predicate.value]
    src = graph.intern(statement.subject.value)
    dst = graph.intern(statement.object.value)
    return graph.add_edge(src, dst, kind)


def generate_connectors(hg2: HG2, role_connectors: bool = True) -> None:
    """Wire the hypergraph layer to the graph layer.

    Emits, deduplicated: one edge connector per hyperedge to rdf:Statement;
    role connectors (when enabled) from head nodes to rdf:predicate and from
    tail positions 0/1 to rdf:subject/rdf:object; a connector to rdf:datatype
    from every datatyped literal node; and a typing connector from every
    instance node whose IRI has a type edge in the graph layer to the class
    node it points at.  Safe to run repeatedly: the second run adds nothing.
    """
    anchors: dict[str, int] = {}
    for iri in ANCHOR_IRIS:
        node = hg2.g.find(iri)
        if node is None:
            raise MissingAnchorError(f"graph layer has no node for <{iri}>; load the built-in vocabulary first")
        anchors[iri] = node

    for edge in hg2.h.edges:
        hg2.add_connector(EdgeConnector(edge.id, anchors[RDF_STATEMENT]))
        if not role_connectors:
            continue
        for node in edge.head:
            hg2.add_connector(NodeConnector(node, anchors[RDF_PREDICATE]))
        for position, node in enumerate(edge.tail):
            if position == 0:
                hg2.add_connector(NodeConnector(node, anchors[RDF_SUBJECT]))
            elif position == 1:
                hg2.add_connector(NodeConnector(node, anchors[RDF_OBJECT]))

    class_nodes: dict[int, list[int]] = {}
    for graph_edge in hg2.g.edges:
        if graph_edge.kind is EdgeKind.TYPE:
            class_nodes.setdefault(graph_edge.src, []).append(graph_edge.dst)

    for node_id, payload in enumerate(hg2.h.nodes):
        if not isinstance(payload, NodePayload):
            continue
        if payload.kind is PayloadKind.LITERAL and payload.datatype_iri is not None:
            hg2.add_connector(NodeConnector(node_id, anchors[RDF_DATATYPE]))
        elif payload.kind is PayloadKind.URI and payload.iri is not None:
            graph_node = hg2.g.find(payload.iri)
            if graph_node is not None:
                for class_node in class_nodes.get(graph_node, ()):
                    hg2.add_connector(NodeConnector(node_id, class_node))


@dataclass(frozen=True)
class NodePlacement:
    """Where one hypernode sits: its payload kind and every slot it occupies."""

    node: int
    kind: PayloadKind | None
    occurrences: tuple[Occurrence, ...]

    def positions(self) -> set[tuple[str, int]]:
        return {(occ.slot, occ.position) for occ in self.occurrences}


def classify_node(hg2: HG2, node: int) -> NodePlacement:
    if not 0 <= node < hg2.h.node_count:
        raise UnknownNodeError(node)
    payload = hg2.h.nodes[node]
    kind = payload.kind if isinstance(payload, NodePayload) else None
    return NodePlacement(node, kind, tuple(hg2.h.incidence_of(node)))


def validate_mapping(hg2: HG2) -> list[Violation]:
    """Check the placement rules; reports violations without mutating.

    A literal node may never sit in a head slot or in tail position 0, a
    blank node may never sit in a head slot, every statement-shaped hyperedge
    has exactly one head and two tails, and a literal payload may not carry
    both a language tag and a datatype.  Structures built purely through
    map_statement satisfy all of these.
    """
    violations: list[Violation] = []
    for node_id, payload in enumerate(hg2.h.nodes):
        if (
            isinstance(payload, NodePayload)
            and payload.kind is PayloadKind.LITERAL
            and payload.language_tag is not None
            and payload.datatype_iri is not None
        ):
            violations.append(
                Violation(
                    "LanguageTagOnTyped",
                    f"hypernode {node_id} carries both a language tag and a datatype",
                    node=node_id,
                )
            )

    def kind_of(node: int) -> PayloadKind | None:
        payload = hg2.h.nodes[node]
        return payload.kind if isinstance(payload, NodePayload) else None

    for edge in hg2.h.edges:
        if len(edge.head) != 1 or len(edge.tail) != 2:
            violations.append(
                Violation(
                    "EdgeArityViolation",
                    f"hyperedge {edge.id} has |head|={len(edge.head)}, "
                    f"|tail|={len(edge.tail)}; statements need 1 and 2",
                    edge=edge.id,
                )
            )
        for node in edge.head:
            kind = kind_of(node)
            if kind is PayloadKind.LITERAL:
                violations.append(
                    Violation(
                        "LiteralInHead",
                        f"literal hypernode {node} occupies a head slot of hyperedge {edge.id}",
                        node=node,
                        edge=edge.id,
                    )
                )
            elif kind is PayloadKind.BLANK:
                violations.append(
                    Violation(
                        "BlankInHead",
                        f"blank hypernode {node} occupies a head slot of hyperedge {edge.id}",
                        node=node,
                        edge=edge.id,
                    )
                )
        if edge.tail and kind_of(edge.tail[0]) is PayloadKind.LITERAL:
            violations.append(
                Violation(
                    "LiteralAsSubject",
                    f"literal hypernode {edge.tail[0]} occupies tail position 0 of hyperedge {edge.id}",
                    node=edge.tail[0],
                    edge=edge.id,
                )
            )
    return violations


@dataclass(frozen=True)
class ConstraintWarning:
    kind: str
    node: int
    predicate_iri: str
    class_iri: str

    def __str__(self) -> str:
        role = "subject" if self.kind == "DomainUnsatisfied" else "object"
        return (
            f"{self.kind}: {role} hypernode {self.node} of <{self.predicate_iri}> "
            f"is not typed as <{self.class_iri}> or a subclass of it"
        )


def _typed_within(hg2: HG2, node: int, class_node: int) -> bool:
    closure = hg2.g.subclass_closure(class_node)
    return any(anchor in closure for anchor in hg2.anchors_of_node(node))


def check_domain_range(hg2: HG2) -> list[ConstraintWarning]:
    """Soft-check rdfs:domain / rdfs:range declarations against the instances.

    For every statement-shaped hyperedge whose predicate has a domain
    constraint C, the subject must carry a typing connector to C or to a
    descendant of C; symmetrically for range and the object, except that a
    literal object satisfies any range whose subclass closure contains
    rdfs:Literal.  Produces warnings, never rejections.
    """
    warnings: list[ConstraintWarning] = []
    literal_class = hg2.g.find(RDFS_LITERAL)
    for edge in hg2.h.edges:
        if len(edge.head) != 1 or len(edge.tail) != 2:
            continue
        head_payload = hg2.h.nodes[edge.head[0]]
        if not isinstance(head_payload, NodePayload) or head_payload.kind is not PayloadKind.URI:
            continue
        assert head_payload.iri is not None
        predicate_node = hg2.g.find(head_payload.iri)
        if predicate_node is None:
            continue

        domain = hg2.g.constraint_of(predicate_node, EdgeKind.DOMAIN)
        if domain is not None and not _typed_within(hg2, edge.tail[0], domain):
            warnings.append(
                ConstraintWarning(
                    "DomainUnsatisfied", edge.tail[0], head_payload.iri, hg2.g.iri_of(domain)
                )
            )

        range_class = hg2.g.constraint_of(predicate_node, EdgeKind.RANGE)
        if range_class is not None:
            object_node = edge.tail[1]
            object_payload = hg2.h.nodes[object_node]
            if isinstance(object_payload, NodePayload) and object_payload.kind is PayloadKind.LITERAL:
                satisfied = (
                    literal_class is not None
                    and literal_class in hg2.g.subclass_closure(range_class)
                )
            else:
                satisfied = _typed_within(hg2, object_node, range_class)
            if not satisfied:
                warnings.append(
                    ConstraintWarning(
                        "RangeUnsatisfied", object_node, head_payload.iri, hg2.g.iri_of(range_class)
                    )
                )
    return warnings


@dataclass
class IntegrationOptions:
    stratify_schema: bool = True
    generate_role_connectors: bool = True
    dedupe_literals: bool = True


@dataclass
class IntegrationReport:
    statements_in: int = 0
    hyperedges_created: int = 0
    schema_edges_created: int = 0
    connectors_v: int = 0
    connectors_e: int = 0
    warnings: list[str] = field(default_factory=list)

    def summary(self) -> str:
        lines = [
            f"statements in:        {self.statements_in}",
            f"hyperedges created:   {self.hyperedges_created}",
            f"schema edges created: {self.schema_edges_created}",
            f"node connectors:      {self.connectors_v}",
            f"edge connectors:      {self.connectors_e}",
            f"warnings:             {len(self.warnings)}",
        ]
        lines.extend(f"  {warning}" for warning in self.warnings)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "statements_in": self.statements_in,
            "hyperedges_created": self.hyperedges_created,
            "schema_edges_created": self.schema_edges_created,
            "connectors_v": self.connectors_v,
            "connectors_e": self.connectors_e,
            "warnings": list(self.warnings),
        }


def integrate(
    statements: list[Statement], options: IntegrationOptions | None = None
) -> tuple[HG2, IntegrationReport]:
    """Build a frozen two-layer structure from parsed statements.

    Pipeline: load the built-in vocabulary, route each statement to its
    layer, map it, generate connectors, then run the placement checks (their
    findings land in the report as warnings).  Deterministic for a given
    input and options; the result is frozen and safe to query concurrently.
    """
    opts = options if options is not None else IntegrationOptions()
    hg2 = HG2(g=load_builtin_vocabulary())
    report = IntegrationReport(statements_in=len(statements))
    interner = Interner(hg2, dedupe_literals=opts.dedupe_literals)
    for statement in statements:
        if opts.stratify_schema and route_statement(statement) is Layer.SCHEMA:
            if map_schema_statement(statement, hg2.g):
                report.schema_edges_created += 1
        else:
            map_statement(statement, interner)
    report.hyperedges_created = hg2.h.edge_count
    generate_connectors(hg2, role_connectors=opts.generate_role_connectors)
    report.connectors_v = len(hg2.connectors_v)
    report.connectors_e = len(hg2.connectors_e)
    report.warnings.extend(str(violation) for violation in validate_mapping(hg2))
    hg2.freeze()
    return hg2, report
