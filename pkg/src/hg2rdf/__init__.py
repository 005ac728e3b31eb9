"""hg2rdf: parse RDF N-Triples and integrate them into a two-layer structure.

The instance layer is a directed hypergraph (one hyperedge per statement,
predicate in the head, subject and object in the tail); the schema layer is a
labeled graph of class and property nodes; connectors tie the layers
together.  See the README for a tour.
"""
from __future__ import annotations

from .dot import to_dot
from .hg2 import (
    FORMAT_VERSION,
    HG2,
    EdgeConnector,
    NodeConnector,
    NodePayload,
    PayloadKind,
    SchemaViolation,
    SerializationError,
    UnknownGraphNodeError,
    UnknownHyperEdgeError,
    UnknownHyperNodeError,
    UnknownKind,
    Violation,
    deserialize,
    serialize,
    validate_layering,
)
from .hypergraph import (
    HEAD,
    TAIL,
    EmptySlotError,
    HyperEdge,
    Hypergraph,
    Occurrence,
    UnknownNodeError,
)
from .mapper import (
    ANCHOR_IRIS,
    SCHEMA_PREDICATES,
    ConstraintWarning,
    IntegrationOptions,
    IntegrationReport,
    Interner,
    Layer,
    MissingAnchorError,
    NodePlacement,
    check_domain_range,
    classify_node,
    generate_connectors,
    integrate,
    map_schema_statement,
    map_statement,
    payload_for,
    route_statement,
    statement_of,
    term_of,
    validate_mapping,
)
from .ntriples import (
    BadEscape,
    BlankLabel,
    ErrorCode,
    IriRef,
    Literal,
    ParseError,
    Statement,
    Term,
    format_statement,
    format_term,
    parse_document,
    parse_line,
    unescape_literal,
)
from .schema import (
    BUILTIN_VOCABULARY,
    RDF_NS,
    RDFS_NS,
    EdgeKind,
    GraphEdge,
    SchemaGraph,
    load_builtin_vocabulary,
)
from .traversal import (
    PathResult,
    QueryResult,
    ResultKind,
    instances_of,
    path_exists,
    reachable_from,
    statements_about,
)

__version__ = "0.1.0"

__all__ = [
    "ANCHOR_IRIS",
    "BUILTIN_VOCABULARY",
    "BadEscape",
    "BlankLabel",
    "ConstraintWarning",
    "EdgeConnector",
    "EdgeKind",
    "EmptySlotError",
    "ErrorCode",
    "FORMAT_VERSION",
    "GraphEdge",
    "HEAD",
    "HG2",
    "HyperEdge",
    "Hypergraph",
    "IntegrationOptions",
    "IntegrationReport",
    "Interner",
    "IriRef",
    "Layer",
    "Literal",
    "MissingAnchorError",
    "NodeConnector",
    "NodePayload",
    "NodePlacement",
    "Occurrence",
    "ParseError",
    "PathResult",
    "PayloadKind",
    "QueryResult",
    "RDF_NS",
    "RDFS_NS",
    "ResultKind",
    "SCHEMA_PREDICATES",
    "SchemaGraph",
    "SchemaViolation",
    "SerializationError",
    "Statement",
    "TAIL",
    "Term",
    "UnknownGraphNodeError",
    "UnknownHyperEdgeError",
    "UnknownHyperNodeError",
    "UnknownKind",
    "UnknownNodeError",
    "Violation",
    "check_domain_range",
    "classify_node",
    "deserialize",
    "format_statement",
    "format_term",
    "generate_connectors",
    "instances_of",
    "integrate",
    "load_builtin_vocabulary",
    "map_schema_statement",
    "map_statement",
    "parse_document",
    "parse_line",
    "path_exists",
    "payload_for",
    "reachable_from",
    "route_statement",
    "serialize",
    "statement_of",
    "statements_about",
    "term_of",
    "to_dot",
    "unescape_literal",
    "validate_layering",
    "validate_mapping",
    "__version__",
]
