"""Immutable undirected simple graphs with per-node generation metadata."""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised when an edge insertion would break simplicity."""


@dataclass(frozen=True)
class NodeMeta:
    generation: int

    @property
    def is_hub(self) -> bool:
        return self.generation == 0


class Graph:
    """Read-only simple graph on nodes ``0..n-1``.

    Neighbor sets are stored as sorted tuples so that every traversal is
    deterministic. Build instances with :class:`GraphBuilder` or
    :meth:`Graph.from_edges`.
    """

    __slots__ = ("_adj", "_generation", "_m")

    def __init__(self, adjacency: Sequence[Iterable[int]], generation: Sequence[int] | None = None):
        adj = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        n = len(adj)
        if generation is None:
            generation = (0,) * n
        if len(generation) != n:
            raise GraphError("generation list length does not match node count")
        deg_sum = 0
        for u, nbrs in enumerate(adj):
            for i, v in enumerate(nbrs):
                if not 0 <= v < n:
                    raise GraphError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise GraphError(f"self-loop at {u}")
                if i and nbrs[i - 1] == v:
                    raise GraphError(f"duplicate edge ({u}, {v})")
            deg_sum += len(nbrs)
        for u, nbrs in enumerate(adj):
            for v in nbrs:
                if not _contains(adj[v], u):
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")
        object.__setattr__(self, "_adj", adj)
        object.__setattr__(self, "_generation", tuple(int(x) for x in generation))
        object.__setattr__(self, "_m", deg_sum // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], generation: Sequence[int] | None = None) -> "Graph":
        b = GraphBuilder(n, generation)
        for u, v in edges:
            b.add_edge(u, v)
        return b.build()

    @property
    def node_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._m

    @property
    def generation(self) -> tuple[int, ...]:
        return self._generation

    def meta(self, u: int) -> NodeMeta:
        return NodeMeta(self._generation[u])

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return _contains(self._adj[u], v)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if v > u:
                    yield (u, v)

    def edge_list(self) -> list[tuple[int, int]]:
        return list(self.edges())

    def neighbor_masks(self) -> list[int]:
        masks = []
        for nbrs in self._adj:
            m = 0
            for v in nbrs:
                m |= 1 << v
            masks.append(m)
        return masks

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        adj = [set(nbrs) for nbrs in self._adj]
        adj[u].discard(v)
        adj[v].discard(u)
        return Graph(adj, self._generation)

    def induced_without(self, removed: Iterable[int]) -> "Graph":
        """Subgraph induced by all nodes except ``removed``, relabelled densely."""
        gone = set(removed)
        keep = [u for u in range(self.node_count) if u not in gone]
        index = {u: i for i, u in enumerate(keep)}
        adj = [[index[v] for v in self._adj[u] if v in index] for u in keep]
        return Graph(adj, [self._generation[u] for u in keep])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj and self._generation == other._generation

    def __hash__(self):
        return hash((self._adj, self._generation))

    def __repr__(self):
        return f"Graph(n={self.node_count}, m={self.edge_count})"


def _contains(sorted_tuple: tuple[int, ...], x: int) -> bool:
    i = bisect_left(sorted_tuple, x)
    return i < len(sorted_tuple) and sorted_tuple[i] == x


class GraphBuilder:
    """Mutable staging area; :meth:`build` freezes it into a :class:`Graph`."""

    def __init__(self, n: int = 0, generation: Sequence[int] | None = None):
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._generation: list[int] = list(generation) if generation is not None else [0] * n
        if len(self._generation) != n:
            raise GraphError("generation list length does not match node count")

    @property
    def node_count(self) -> int:
        return len(self._adj)

    def add_node(self, generation: int = 0) -> int:
        self._adj.append(set())
        self._generation.append(generation)
        return len(self._adj) - 1

    def add_edge(self, u: int, v: int) -> None:
        n = len(self._adj)
        if u == v:
            raise GraphError(f"self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) references a node outside 0..{n - 1}")
        if v in self._adj[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        self._adj[u].add(v)
        self._adj[v].add(u)

    def build(self) -> Graph:
        return Graph(self._adj, self._generation)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return a copy of ``g`` with the edge ``(u, v)`` added."""
    b = GraphBuilder(g.node_count, g.generation)
    for a, c in g.edges():
        b.add_edge(a, c)
    b.add_edge(u, v)
    return b.build()


def complete_graph(n: int) -> Graph:
    return Graph([[v for v in range(n) if v != u] for u in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.node_count
    out = []
    for s in range(g.node_count):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        out.append(sorted(comp))
    return out


def component_count(g: Graph) -> int:
    return len(components(g))


def is_connected(g: Graph) -> bool:
    return g.node_count <= 1 or component_count(g) == 1


def rank_nullity(g: Graph) -> tuple[int, int]:
    """Cycle-matroid rank ``|V| - k`` and nullity ``|E| - |V| + k``."""
    k = component_count(g)
    return g.node_count - k, g.edge_count - g.node_count + k


def triangle_count(g: Graph) -> int:
    masks = g.neighbor_masks()
    total = 0
    for u, v in g.edges():
        total += bin(masks[u] & masks[v]).count("1")
    return total // 3
