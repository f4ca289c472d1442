"""Serialization of family members: edge list, DOT and JSON."""

from __future__ import annotations

import json

from .generator import FamilyParams, hub_nodes
from .graph import Graph, GraphError

FORMATS = ("edgelist", "dot", "json")


def to_edgelist(graph: Graph, p: FamilyParams) -> str:
    lines = [f"# q={p.q} g={p.g}", f"# N={graph.node_count}", f"# M={graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def read_edgelist(text: str) -> tuple[FamilyParams, Graph]:
    """Parse :func:`to_edgelist` output; node generations are not stored and come back as 0."""
    header: dict[str, int] = {}
    edges = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for token in line[1:].split():
                key, _, value = token.partition("=")
                header[key] = int(value)
            continue
        u, v = map(int, line.split())
        edges.append((u, v))
    missing = {"q", "g", "N", "M"} - header.keys()
    if missing:
        raise GraphError(f"edge list header lacks {sorted(missing)}")
    if len(edges) != header["M"]:
        raise GraphError(f"header says M={header['M']} but body has {len(edges)} edges")
    graph = Graph.from_edges(header["N"], edges)
    return FamilyParams(header["q"], header["g"]), graph


def to_dot(graph: Graph, p: FamilyParams) -> str:
    lines = [f"graph G_{p.q}_{p.g} {{"]
    lines.extend(f"  v{u};" for u in range(graph.node_count))
    lines.extend(f"  v{u} -- v{v};" for u, v in graph.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: Graph, p: FamilyParams) -> str:
    payload = {
        "q": p.q,
        "g": p.g,
        "n": graph.node_count,
        "m": graph.edge_count,
        "hubs": hub_nodes(graph),
        "generation": list(graph.generation),
        "edges": [[u, v] for u, v in graph.edges()],
    }
    return json.dumps(payload, separators=(",", ":")) + "\n"


def read_json(text: str) -> tuple[FamilyParams, Graph]:
    payload = json.loads(text)
    graph = Graph.from_edges(payload["n"], [tuple(e) for e in payload["edges"]], payload["generation"])
    if graph.edge_count != payload["m"]:
        raise GraphError(f"json says m={payload['m']} but lists {graph.edge_count} edges")
    return FamilyParams(payload["q"], payload["g"]), graph


def render_graph(graph: Graph, p: FamilyParams, fmt: str) -> str:
    if fmt == "edgelist":
        return to_edgelist(graph, p)
    if fmt == "dot":
        return to_dot(graph, p)
    if fmt == "json":
        return to_json(graph, p)
    raise ValueError(f"unknown graph format {fmt!r}; choose from {', '.join(FORMATS)}")
