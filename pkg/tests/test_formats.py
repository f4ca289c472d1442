import json

import networkx as nx
import pytest

from simplexnet.formats import read_edgelist, read_json, render_graph, to_dot, to_edgelist, to_json
from simplexnet.generator import FamilyParams, build_corona
from simplexnet.graph import GraphError


def test_triangle_edgelist():
    p = FamilyParams(1, 0)
    assert to_edgelist(build_corona(p), p) == "# q=1 g=0\n# N=3\n# M=3\n0 1\n0 2\n1 2\n"


@pytest.mark.parametrize("q, g", [(1, 0), (2, 1), (1, 3)])
def test_edgelist_round_trip(q, g):
    p = FamilyParams(q, g)
    graph = build_corona(p)
    back_p, back = read_edgelist(to_edgelist(graph, p))
    assert back_p == p
    assert back.node_count == graph.node_count
    assert back.edge_list() == graph.edge_list()


def test_edgelist_header_mismatch_detected():
    with pytest.raises(GraphError):
        read_edgelist("# q=1 g=0\n# N=3\n# M=2\n0 1\n0 2\n1 2\n")


def test_json_fields():
    p = FamilyParams(2, 1)
    data = json.loads(to_json(build_corona(p), p))
    assert (data["n"], data["m"], data["hubs"]) == (16, 36, [0, 1, 2, 3])
    assert data["edges"] == sorted(data["edges"])
    assert [u for u, gen in enumerate(data["generation"]) if gen == 0] == data["hubs"]


def test_json_round_trip_keeps_generations():
    p = FamilyParams(1, 2)
    graph = build_corona(p)
    assert read_json(to_json(graph, p)) == (p, graph)


def test_dot_is_parseable_undirected_graph():
    p = FamilyParams(1, 1)
    text = to_dot(build_corona(p), p)
    assert text.startswith("graph ") and "->" not in text
    edges = [line.strip().rstrip(";").split(" -- ") for line in text.splitlines() if "--" in line]
    h = nx.Graph(edges)
    assert (h.number_of_nodes(), h.number_of_edges()) == (6, 9)
    assert all(node.startswith("v") for node in h.nodes)


def test_render_graph_rejects_unknown_format():
    p = FamilyParams(1, 0)
    with pytest.raises(ValueError):
        render_graph(build_corona(p), p, "gml")
