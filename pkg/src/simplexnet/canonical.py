"""Canonical labelling of small simple graphs by individualization-refinement.

The search refines an ordered vertex partition to an equitable one, then
branches on the first non-singleton cell. Branches that differ only by a
pair of twins (vertices with equal open or closed neighborhoods) are
skipped: swapping twins is an automorphism fixing the current partition,
so both subtrees yield the same certificate.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph

Certificate = tuple[int, tuple[tuple[int, int], ...]]


def _refine(cells: list[list[int]], adj: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    cell_of = [0] * n
    while True:
        for idx, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = idx
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple(sorted(cell_of[w] for w in adj[v]))
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                out.extend(groups[s] for s in sorted(groups))
            else:
                out.append(cell)
        cells = out
        if not changed:
            return cells


def _twin_keys(adj: Sequence[Sequence[int]]) -> list[tuple]:
    keys = []
    for v, nbrs in enumerate(adj):
        open_n = tuple(nbrs)
        closed_n = tuple(sorted((*nbrs, v)))
        keys.append((open_n, closed_n))
    return keys


def canonical_labeling(
    n: int,
    adj: Sequence[Sequence[int]],
    colors: Sequence[int] | None = None,
) -> tuple[list[int], Certificate]:
    """Return ``(position, certificate)``; ``position[v]`` is v's canonical label."""
    edges = [(u, v) for u in range(n) for v in adj[u] if u < v]
    if colors is None:
        init = [list(range(n))] if n else []
    else:
        buckets: dict[int, list[int]] = {}
        for v in range(n):
            buckets.setdefault(colors[v], []).append(v)
        init = [buckets[c] for c in sorted(buckets)]
    open_key: dict[tuple, int] = {}
    closed_key: dict[tuple, int] = {}
    open_class, closed_class = [], []
    for o, c in _twin_keys(adj):
        open_class.append(open_key.setdefault(o, len(open_key)))
        closed_class.append(closed_key.setdefault(c, len(closed_key)))

    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(cells, adj, n)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            pos = [0] * n
            for idx, cell in enumerate(cells):
                pos[cell[0]] = idx
            cert = tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in edges))
            if best[1] is None or cert < best[1]:
                best[0], best[1] = pos, cert
            return
        cell = cells[target]
        tried_open: set[int] = set()
        tried_closed: set[int] = set()
        for v in cell:
            if open_class[v] in tried_open or closed_class[v] in tried_closed:
                continue
            tried_open.add(open_class[v])
            tried_closed.add(closed_class[v])
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :])

    search(init)
    if n == 0:
        return [], (0, ())
    return best[0], (n, best[1])


def canonical_form(graph: Graph, colors: Sequence[int] | None = None) -> Certificate:
    adj = [graph.neighbors(u) for u in range(graph.node_count)]
    return canonical_labeling(graph.node_count, adj, colors)[1]


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.node_count != b.node_count or a.edge_count != b.edge_count:
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_form(a) == canonical_form(b)
