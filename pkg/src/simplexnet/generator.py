"""Construction of the simplicial network family G_q(g) and its size laws.

Two independent builders are provided. :func:`build_corona` grows the graph
edge by edge (every edge spawns a q-clique wired to both endpoints);
:func:`build_join` glues (q+1)(q+2)/2 copies of the previous generation at
their hub nodes. They label nodes differently but produce isomorphic graphs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graph import Graph, GraphBuilder

DEFAULT_MAX_NODES = 200_000
MAX_NODES_ENV = "SIMPLEX_MAX_NODES"


class SizeGuardError(RuntimeError):
    """The requested family member exceeds the configured node ceiling."""


class IntegralityError(ArithmeticError):
    """A quantity that must be an integer evaluated to a proper fraction."""


@dataclass(frozen=True, order=True)
class FamilyParams:
    q: int
    g: int

    def __post_init__(self):
        if not isinstance(self.q, int) or not isinstance(self.g, int):
            raise TypeError("q and g must be integers")
        if self.q < 1:
            raise ValueError(f"q must be >= 1, got {self.q}")
        if self.g < 0:
            raise ValueError(f"g must be >= 0, got {self.g}")


@dataclass(frozen=True)
class CensusRow:
    generation: int
    degree: int
    count: int


def as_integer(value: Fraction | int, what: str) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise IntegralityError(f"{what} evaluated to non-integer {value}")
    return value.numerator


def clique_edges(q: int) -> int:
    """(q+1)(q+2)/2: edges of K_{q+2}, also the per-generation growth factor."""
    return (q + 1) * (q + 2) // 2


def edge_count(p: FamilyParams) -> int:
    return clique_edges(p.q) ** (p.g + 1)


def node_count(p: FamilyParams) -> int:
    q = p.q
    value = Fraction(2, q + 3) * clique_edges(q) ** (p.g + 1) + Fraction(2 * (q + 2), q + 3)
    return as_integer(value, f"N({q},{p.g})")


def new_node_count(p: FamilyParams) -> int:
    """Nodes created at iteration g; the initial q+2 hubs count as cohort 0."""
    if p.g == 0:
        return p.q + 2
    return p.q * clique_edges(p.q) ** p.g


def degree_census(p: FamilyParams) -> list[CensusRow]:
    q, g = p.q, p.g
    return [
        CensusRow(gv, (q + 1) ** (g - gv + 1), new_node_count(FamilyParams(q, gv)))
        for gv in range(g + 1)
    ]


def empirical_census(graph: Graph) -> list[CensusRow]:
    """Census read off a built graph; raises if a cohort has mixed degrees."""
    by_gen: dict[int, set[int]] = {}
    counts: dict[int, int] = {}
    for u in range(graph.node_count):
        gv = graph.generation[u]
        by_gen.setdefault(gv, set()).add(graph.degree(u))
        counts[gv] = counts.get(gv, 0) + 1
    rows = []
    for gv in sorted(by_gen):
        degs = by_gen[gv]
        if len(degs) != 1:
            raise ValueError(f"cohort {gv} has mixed degrees {sorted(degs)}")
        rows.append(CensusRow(gv, degs.pop(), counts[gv]))
    return rows


def average_degree(p: FamilyParams) -> Fraction:
    return Fraction(2 * edge_count(p), node_count(p))


def resolve_max_nodes(max_nodes: int | None = None) -> int:
    if max_nodes is not None:
        return max_nodes
    env = os.environ.get(MAX_NODES_ENV)
    if env:
        return int(env)
    return DEFAULT_MAX_NODES


def _check_size(p: FamilyParams, max_nodes: int | None) -> None:
    limit = resolve_max_nodes(max_nodes)
    n = node_count(p)
    if n > limit:
        raise SizeGuardError(f"G_{p.q}({p.g}) has {n} nodes, above the limit of {limit}")


def build_corona(p: FamilyParams, max_nodes: int | None = None) -> Graph:
    _check_size(p, max_nodes)
    q = p.q
    b = GraphBuilder(q + 2, [0] * (q + 2))
    edges = list(combinations(range(q + 2), 2))
    for u, v in edges:
        b.add_edge(u, v)
    for step in range(1, p.g + 1):
        added = []
        for u, v in edges:
            fresh = [b.add_node(step) for _ in range(q)]
            for w in fresh:
                added.append((u, w))
                added.append((v, w))
            added.extend(combinations(fresh, 2))
        for u, v in added:
            b.add_edge(u, v)
        edges = sorted(edges + added)
    return b.build()


def build_join(p: FamilyParams, max_nodes: int | None = None) -> Graph:
    _check_size(p, max_nodes)
    q = p.q
    n = q + 2
    edges = list(combinations(range(n), 2))
    generation = [0] * n
    for _ in range(p.g):
        new_edges: list[tuple[int, int]] = []
        new_gen = [0] * (q + 2)
        for i, j in combinations(range(q + 2), 2):
            # copy (i, j): its hubs i and j merge into global hubs i and j,
            # every other node of the copy gets a fresh id
            mapping = {}
            for u in range(n):
                if u == i or u == j:
                    mapping[u] = u
                else:
                    mapping[u] = len(new_gen)
                    new_gen.append(generation[u] + 1)
            for u, v in edges:
                a, c = mapping[u], mapping[v]
                new_edges.append((a, c) if a < c else (c, a))
        edges = new_edges
        generation = new_gen
        n = len(generation)
    return Graph.from_edges(n, edges, generation)


def hub_nodes(graph: Graph) -> list[int]:
    return [u for u in range(graph.node_count) if graph.generation[u] == 0]
