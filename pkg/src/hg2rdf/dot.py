"""Graphviz DOT rendering of the two-layer structure.

DOT has no native hyperedges, so each hyperedge becomes a square junction
vertex: head nodes point at the junction with bold links, the junction points
at its tail nodes in order.  The graph layer is a second cluster with its
edges labeled by kind (s/t/d/r), and connectors cross between the clusters as
dashed links.
"""
from __future__ import annotations

from .hg2 import HG2, NodePayload
from .mapper import term_of
from .ntriples import format_term


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")


def _node_label(payload: object) -> str:
    if isinstance(payload, NodePayload):
        try:
            return format_term(term_of(payload))
        except ValueError:
            pass
    return str(payload)


def to_dot(hg2: HG2) -> str:
    """Render the structure as a DOT digraph (deterministic output)."""
    lines = ["digraph hg2 {", "  rankdir=LR;"]

    lines.append("  subgraph cluster_hypergraph {")
    lines.append('    label="hypergraph layer";')
    for node_id, payload in enumerate(hg2.h.nodes):
        lines.append(f'    h{node_id} [label="{_escape(_node_label(payload))}"];')
    for edge in hg2.h.edges:
        lines.append(f'    e{edge.id} [shape=box, label="E{edge.id}"];')
        for node in edge.head:
            lines.append(f"    h{node} -> e{edge.id} [style=bold];")
        for node in edge.tail:
            lines.append(f"    e{edge.id} -> h{node};")
    lines.append("  }")

    lines.append("  subgraph cluster_graph {")
    lines.append('    label="graph layer";')
    for node_id, iri in enumerate(hg2.g.iris):
        lines.append(f'    g{node_id} [label="{_escape(iri)}"];')
    for graph_edge in hg2.g.edges:
        lines.append(
            f'    g{graph_edge.src} -> g{graph_edge.dst} [label="{graph_edge.kind.value}"];'
        )
    lines.append("  }")

    for connector in hg2.connectors_v:
        lines.append(f"  h{connector.hypernode} -> g{connector.graph_node} [style=dashed];")
    for connector in hg2.connectors_e:
        lines.append(f"  e{connector.hyperedge} -> g{connector.graph_node} [style=dashed];")

    lines.append("}")
    return "\n".join(lines) + "\n"
