"""Exhaustive reference counts for tiny graphs.

Deliberately naive: subsets, products and combinations with no pruning, so
they share no logic with the package oracles they are compared against.
"""

from __future__ import annotations

from itertools import combinations, product

import networkx as nx

from simplexnet.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.node_count))
    h.add_edges_from(g.edges())
    return h


def independence(g: Graph) -> int:
    n = g.node_count
    edges = g.edge_list()
    for k in range(n, -1, -1):
        for sub in combinations(range(n), k):
            s = set(sub)
            if not any(u in s and v in s for u, v in edges):
                return k
    return 0


def domination(g: Graph) -> int:
    n = g.node_count
    closed = [set(g.neighbors(u)) | {u} for u in range(n)]
    for k in range(n + 1):
        for sub in combinations(range(n), k):
            covered = set().union(*(closed[u] for u in sub)) if sub else set()
            if len(covered) == n:
                return k
    raise AssertionError("unreachable")


def colorings(g: Graph, k: int) -> int:
    edges = g.edge_list()
    return sum(
        all(c[u] != c[v] for u, v in edges)
        for c in product(range(k), repeat=g.node_count)
    )


def acyclic_orientations(g: Graph, root: int | None = None) -> int:
    """Count acyclic orientations; with ``root``, only those where every node reaches it."""
    edges = g.edge_list()
    total = 0
    for flips in product((False, True), repeat=len(edges)):
        d = nx.DiGraph()
        d.add_nodes_from(range(g.node_count))
        d.add_edges_from((v, u) if f else (u, v) for (u, v), f in zip(edges, flips))
        if not nx.is_directed_acyclic_graph(d):
            continue
        if root is not None and len(nx.ancestors(d, root)) != g.node_count - 1:
            continue
        total += 1
    return total


def perfect_matchings(g: Graph, vacant=()) -> int:
    keep = [u for u in range(g.node_count) if u not in vacant]
    if len(keep) % 2:
        return 0
    edges = [(u, v) for u, v in g.edges() if u not in vacant and v not in vacant]
    count = 0
    for chosen in combinations(edges, len(keep) // 2):
        touched = {x for e in chosen for x in e}
        if len(touched) == len(keep):
            count += 1
    return count


def spanning_trees(g: Graph, must_contain=None) -> int:
    n = g.node_count
    edges = g.edge_list()
    count = 0
    for chosen in combinations(edges, n - 1):
        if must_contain is not None and must_contain not in chosen:
            continue
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        ok = True
        for u, v in chosen:
            a, b = find(u), find(v)
            if a == b:
                ok = False
                break
            parent[a] = b
        count += ok
    return count


def two_tree_forests_separating(n: int, a: int, b: int) -> int:
    """Spanning forests of K_n with exactly two trees, ``a`` and ``b`` in different trees."""
    edges = list(combinations(range(n), 2))
    count = 0
    for chosen in combinations(edges, n - 2):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(chosen)
        if nx.is_forest(h) and nx.number_connected_components(h) == 2 and not nx.has_path(h, a, b):
            count += 1
    return count
