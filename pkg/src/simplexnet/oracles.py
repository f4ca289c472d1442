"""Exact brute-force and polynomial-time oracles for arbitrary small graphs.

None of these routines know anything about the G_q(g) family; they are the
independent side of every closed-form check. Vertex sets are handled as
Python int bitmasks throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import canonical_labeling
from .closed_form import MatchingProfile
from .graph import Graph, GraphError, is_connected

MAX_DETERMINANT_NODES = 3000


class BudgetExceeded(RuntimeError):
    """The oracle would exceed its node, edge or step allowance."""


@dataclass(frozen=True)
class OracleBudget:
    """Resource ceilings for one oracle call.

    ``max_nodes`` bounds the node-exponential searches (independent sets,
    dominating sets, colorings, matchings), ``max_edges`` the edge-exponential
    ones (orientation enumeration, deletion-contraction) and ``max_steps`` the
    number of search nodes or enumerated objects.
    """

    max_nodes: int = 128
    max_edges: int = 24
    max_steps: int = 20_000_000

    def __post_init__(self):
        for name in ("max_nodes", "max_edges", "max_steps"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


DEFAULT_BUDGET = OracleBudget()


class _Counter:
    __slots__ = ("limit", "count", "what")

    def __init__(self, limit: int, what: str):
        self.limit = limit
        self.count = 0
        self.what = what

    def tick(self, k: int = 1) -> None:
        self.count += k
        if self.count > self.limit:
            raise BudgetExceeded(f"{self.what}: more than {self.limit} steps")


def _need_nodes(g: Graph, budget: OracleBudget, what: str) -> None:
    if g.node_count > budget.max_nodes:
        raise BudgetExceeded(f"{what}: {g.node_count} nodes exceeds max_nodes={budget.max_nodes}")


def _need_edges(g: Graph, budget: OracleBudget, what: str) -> None:
    if g.edge_count > budget.max_edges:
        raise BudgetExceeded(f"{what}: {g.edge_count} edges exceeds max_edges={budget.max_edges}")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------- independence


def _clique_cover_size(P: int, masks: list[int]) -> int:
    count = 0
    while P:
        low = P & -P
        clique = low
        cand = P & masks[low.bit_length() - 1]
        while cand:
            w = cand & -cand
            clique |= w
            cand &= masks[w.bit_length() - 1]
        P &= ~clique
        count += 1
    return count


def max_independent_set(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Independence number by branch and bound.

    Branches on a maximum-degree vertex of the remaining subgraph (lowest
    label on ties); a greedy clique cover of the remaining vertices bounds
    how many more can be added.
    """
    _need_nodes(g, budget, "max_independent_set")
    masks = g.neighbor_masks()
    steps = _Counter(budget.max_steps, "max_independent_set")
    best = 0

    def rec(P: int, size: int) -> None:
        nonlocal best
        steps.tick()
        if not P:
            best = max(best, size)
            return
        if size + _clique_cover_size(P, masks) <= best:
            return
        pick, pick_deg = -1, -1
        for v in _bits(P):
            d = (masks[v] & P).bit_count()
            if d > pick_deg:
                pick, pick_deg = v, d
        if pick_deg == 0:
            best = max(best, size + P.bit_count())
            return
        rec(P & ~masks[pick] & ~(1 << pick), size + 1)
        rec(P & ~(1 << pick), size)

    rec((1 << g.node_count) - 1, 0)
    return best


# ---------------------------------------------------------------- domination


def min_dominating_set(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Domination number by exhaustive search with lower-bound pruning.

    Each search node takes the undominated vertex with the fewest admissible
    dominators and branches over them; earlier siblings become forbidden so
    no set is visited twice. The bound is the larger of a greedy packing of
    undominated vertices with pairwise disjoint closed neighborhoods and a
    coverage-ratio bound.
    """
    _need_nodes(g, budget, "min_dominating_set")
    n = g.node_count
    if n == 0:
        return 0
    full = (1 << n) - 1
    closed = [m | (1 << v) for v, m in enumerate(g.neighbor_masks())]
    within2 = []
    for v in range(n):
        m = 0
        for w in _bits(closed[v]):
            m |= closed[w]
        within2.append(m)
    steps = _Counter(budget.max_steps, "min_dominating_set")

    # greedy upper bound
    dom, best = 0, 0
    while dom != full:
        v = max(range(n), key=lambda x: ((closed[x] & ~dom).bit_count(), -x))
        dom |= closed[v]
        best += 1

    def lower_bound(undominated: int, forbidden: int) -> int:
        pack, rest = 0, undominated
        while rest:
            u = (rest & -rest).bit_length() - 1
            rest &= ~within2[u]
            pack += 1
        cover = max((closed[v] & undominated).bit_count() for v in range(n) if not forbidden >> v & 1) if forbidden != full else 0
        if cover == 0:
            return n + 1
        ratio = -(-undominated.bit_count() // cover)
        return max(pack, ratio)

    def rec(dominated: int, count: int, forbidden: int) -> None:
        nonlocal best
        steps.tick()
        if dominated == full:
            best = min(best, count)
            return
        undominated = full & ~dominated
        if count + lower_bound(undominated, forbidden) >= best:
            return
        # branch on the undominated node with the fewest allowed dominators
        options = None
        for u in _bits(undominated):
            opts = closed[u] & ~forbidden
            if options is None or opts.bit_count() < options.bit_count():
                options = opts
                if opts == 0:
                    return
        cands = sorted(_bits(options), key=lambda w: (-(closed[w] & undominated).bit_count(), w))
        banned = forbidden
        for w in cands:
            rec(dominated | closed[w], count + 1, banned)
            banned |= 1 << w

    rec(0, 0, 0)
    return best


def dominates(g: Graph, nodes) -> bool:
    covered = set(nodes)
    for v in nodes:
        covered.update(g.neighbors(v))
    return len(covered) == g.node_count


# ---------------------------------------------------------------- colorings


def degeneracy_order(g: Graph) -> list[int]:
    """Smallest-last order reversed: every vertex has at most d earlier neighbors."""
    n = g.node_count
    deg = g.degrees()
    alive = [True] * n
    removed = []
    for _ in range(n):
        v = min((u for u in range(n) if alive[u]), key=lambda u: (deg[u], u))
        alive[v] = False
        removed.append(v)
        for w in g.neighbors(v):
            if alive[w]:
                deg[w] -= 1
    return removed[::-1]


def count_proper_colorings(g: Graph, colors: int, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Number of proper colorings using a palette of ``colors`` colors.

    Backtracking over a degeneracy order, memoized on the color-class pattern
    of the already colored vertices that still have uncolored neighbors.
    Colors outside that frontier are interchangeable, so unused colors are
    counted in one branch with multiplicity.
    """
    _need_nodes(g, budget, "count_proper_colorings")
    if colors < 0:
        raise ValueError("colors must be non-negative")
    n = g.node_count
    if n == 0:
        return 1
    order = degeneracy_order(g)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    # last position at which each vertex is still needed as a constraint
    last_needed = [max((pos[w] for w in g.neighbors(v)), default=-1) for v in range(n)]
    steps = _Counter(budget.max_steps, "count_proper_colorings")
    memo: dict[tuple, int] = {}

    def rec(i: int, active: tuple[int, ...], pattern: tuple[int, ...]) -> int:
        if i == n:
            return 1
        key = (i, pattern)
        hit = memo.get(key)
        if hit is not None:
            return hit
        steps.tick()
        v = order[i]
        k = max(pattern, default=-1) + 1
        blocked = {pattern[j] for j, a in enumerate(active) if g.has_edge(a, v)}
        total = 0
        choices = [(c, 1) for c in range(k) if c not in blocked]
        if colors > k:
            choices.append((k, colors - k))
        for c, mult in choices:
            nxt_active, nxt_raw = [], []
            for a, cls in zip(active + (v,), pattern + (c,)):
                if last_needed[a] > i:
                    nxt_active.append(a)
                    nxt_raw.append(cls)
            relabel: dict[int, int] = {}
            nxt_pattern = tuple(relabel.setdefault(cls, len(relabel)) for cls in nxt_raw)
            total += mult * rec(i + 1, tuple(nxt_active), nxt_pattern)
        memo[key] = total
        return total

    return rec(0, (), ())


def chromatic_number_oracle(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Smallest palette size admitting a proper coloring."""
    if g.node_count == 0:
        return 0
    k = 1
    while count_proper_colorings(g, k, budget) == 0:
        k += 1
    return k


def _poly_sub(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _falling(n: int) -> list[int]:
    poly = [1]
    for i in range(n):
        poly = _poly_mul(poly, [-i, 1])
    return poly


def chromatic_polynomial_dc(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> list[int]:
    """Chromatic polynomial by deletion-contraction, ascending coefficients.

    Contraction merges parallel edges on the fly (they do not change the
    chromatic polynomial). Subproblems are memoized on their canonical form.
    """
    _need_edges(g, budget, "chromatic_polynomial_dc")
    steps = _Counter(budget.max_steps, "chromatic_polynomial_dc")
    memo: dict = {}

    def solve(n: int, adj: list[set[int]]) -> list[int]:
        m = sum(len(s) for s in adj) // 2
        if m == 0:
            return [0] * n + [1]
        if m == n * (n - 1) // 2:
            return _falling(n)
        # split into components
        seen = [False] * n
        comps = []
        for s in range(n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], [s]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
                        comp.append(w)
            comps.append(sorted(comp))
        if len(comps) > 1:
            out = [1]
            for comp in comps:
                idx = {v: i for i, v in enumerate(comp)}
                out = _poly_mul(out, solve(len(comp), [{idx[w] for w in adj[v]} for v in comp]))
            return out
        if m == n - 1:
            return _poly_mul([0, 1], _poly_pow([-1, 1], n - 1))
        _, cert = canonical_labeling(n, [sorted(s) for s in adj])
        hit = memo.get(cert)
        if hit is not None:
            return hit
        steps.tick()
        u = min(range(n), key=lambda x: (len(adj[x]), x))
        v = min(adj[u])
        deleted = [set(s) for s in adj]
        deleted[u].discard(v)
        deleted[v].discard(u)
        # contract v into u, then drop v and relabel
        merged = [set(s) for s in adj]
        for w in merged[v]:
            if w != u:
                merged[w].discard(v)
                merged[w].add(u)
                merged[u].add(w)
        merged[u].discard(v)
        keep = [x for x in range(n) if x != v]
        idx = {x: i for i, x in enumerate(keep)}
        contracted = [{idx[w] for w in merged[x]} for x in keep]
        result = _poly_sub(solve(n, deleted), solve(n - 1, contracted))
        memo[cert] = result
        return result

    adj = [set(g.neighbors(u)) for u in range(g.node_count)]
    return solve(g.node_count, adj)


def _poly_pow(a: list[int], k: int) -> list[int]:
    out = [1]
    for _ in range(k):
        out = _poly_mul(out, a)
    return out


def eval_coefficients(coeffs: list[int], x: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * x + c
    return value


# ---------------------------------------------------------------- orientations


def _orientation_predecessors(n: int, edges: list[tuple[int, int]], mask: int) -> list[int]:
    """Bit i of ``mask`` set means edge i points from its smaller to its larger end."""
    pred = [0] * n
    for i, (u, v) in enumerate(edges):
        if mask >> i & 1:
            pred[v] |= 1 << u
        else:
            pred[u] |= 1 << v
    return pred


def _is_acyclic(n: int, pred: list[int]) -> bool:
    remaining = (1 << n) - 1
    while remaining:
        progressed = False
        for v in _bits(remaining):
            if pred[v] & remaining == 0:
                remaining &= ~(1 << v)
                progressed = True
        if not progressed:
            return False
    return True


def _reaches(n: int, pred: list[int], root: int) -> int:
    """Mask of nodes with a directed path to ``root``."""
    seen = 1 << root
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= pred[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def _enumerate_acyclic(g: Graph, budget: OracleBudget, what: str):
    _need_edges(g, budget, what)
    n = g.node_count
    edges = g.edge_list()
    steps = _Counter(budget.max_steps, what)
    for mask in range(1 << len(edges)):
        steps.tick()
        pred = _orientation_predecessors(n, edges, mask)
        if _is_acyclic(n, pred):
            yield pred


def count_acyclic_orientations(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    return sum(1 for _ in _enumerate_acyclic(g, budget, "count_acyclic_orientations"))


def count_root_connected_acyclic(g: Graph, root: int, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Acyclic orientations in which every node has a directed path to ``root``."""
    if not 0 <= root < g.node_count:
        raise GraphError(f"root {root} out of range")
    full = (1 << g.node_count) - 1
    return sum(
        1
        for pred in _enumerate_acyclic(g, budget, "count_root_connected_acyclic")
        if _reaches(g.node_count, pred, root) == full
    )


def unique_sink_counts(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> list[int]:
    """For each node, the acyclic orientations whose only sink is that node.

    On a connected graph this equals the root-connected count for that root;
    computed in a single enumeration pass.
    """
    n = g.node_count
    counts = [0] * n
    edges = g.edge_list()
    for pred in _enumerate_acyclic(g, budget, "unique_sink_counts"):
        out_deg = [0] * n
        for u, v in edges:
            if pred[v] >> u & 1:
                out_deg[u] += 1
            else:
                out_deg[v] += 1
        sinks = [v for v in range(n) if out_deg[v] == 0]
        if len(sinks) == 1:
            counts[sinks[0]] += 1
    return counts


# ---------------------------------------------------------------- matchings


def count_perfect_matchings(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Perfect matchings: match the lowest uncovered node to each free neighbor.

    Nodes are first relabelled in smallest-last elimination order (low-degree
    nodes get low labels), which keeps the memo on uncovered-node sets small
    for sparse graphs. Odd order gives 0.
    """
    _need_nodes(g, budget, "count_perfect_matchings")
    n = g.node_count
    if n % 2:
        return 0
    order = degeneracy_order(g)[::-1]
    label = {v: i for i, v in enumerate(order)}
    masks = [0] * n
    for v in range(n):
        for w in g.neighbors(v):
            masks[label[v]] |= 1 << label[w]
    steps = _Counter(budget.max_steps, "count_perfect_matchings")
    memo: dict[int, int] = {0: 1}

    def rec(free: int) -> int:
        hit = memo.get(free)
        if hit is not None:
            return hit
        steps.tick()
        low = free & -free
        u = low.bit_length() - 1
        rest = free ^ low
        total = 0
        for v in _bits(masks[u] & rest):
            total += rec(rest & ~(1 << v))
        memo[free] = total
        return total

    return rec((1 << n) - 1)


def matching_profile_oracle(g: Graph, h1: int, h2: int, budget: OracleBudget = DEFAULT_BUDGET) -> MatchingProfile:
    if h1 == h2:
        raise GraphError("h1 and h2 must differ")
    a = count_perfect_matchings(g.induced_without([h1, h2]), budget)
    b = count_perfect_matchings(g, budget)
    return MatchingProfile(a, b)


def vacancy_profile(g: Graph, h1: int, h2: int, budget: OracleBudget = DEFAULT_BUDGET) -> dict[str, int]:
    """Matchings covering every node except exactly the listed vacant set."""
    return {
        "none": count_perfect_matchings(g, budget),
        "h1": count_perfect_matchings(g.induced_without([h1]), budget),
        "h2": count_perfect_matchings(g.induced_without([h2]), budget),
        "both": count_perfect_matchings(g.induced_without([h1, h2]), budget),
    }


# ---------------------------------------------------------------- spanning trees


def _bareiss_determinant(mat: list[list[int]]) -> int:
    """Fraction-free elimination; every division below is exact."""
    size = len(mat)
    if size == 0:
        return 1
    a = [row[:] for row in mat]
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, size):
            row_i = a[i]
            lead = row_i[k]
            if lead:
                for j in range(k + 1, size):
                    row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            else:
                for j in range(k + 1, size):
                    if row_i[j]:
                        row_i[j] = row_i[j] * pivot // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[-1][-1]


def _kirchhoff(n: int, edges) -> int:
    """Spanning-tree count of a multigraph given by an edge list (loops ignored)."""
    if n <= 1:
        return 1
    if n - 1 > MAX_DETERMINANT_NODES:
        raise BudgetExceeded(f"matrix-tree: {n} nodes exceeds {MAX_DETERMINANT_NODES}")
    deg = [0] * n
    for u, v in edges:
        if u != v:
            deg[u] += 1
            deg[v] += 1
    # eliminate low-degree nodes first, delete the row/column of the busiest node
    order = sorted(range(n), key=lambda x: (deg[x], x))
    drop = order.pop()
    idx = {v: i for i, v in enumerate(order)}
    size = n - 1
    lap = [[0] * size for _ in range(size)]
    for u, v in edges:
        if u == v:
            continue
        for a, b in ((u, v), (v, u)):
            if a != drop:
                lap[idx[a]][idx[a]] += 1
                if b != drop:
                    lap[idx[a]][idx[b]] -= 1
    return _bareiss_determinant(lap)


def count_spanning_trees_mt(g: Graph) -> int:
    """Spanning trees via the matrix-tree theorem; 0 for disconnected graphs."""
    if not is_connected(g):
        return 0
    return _kirchhoff(g.node_count, g.edge_list())


def count_spanning_trees_containing_edge(g: Graph, u: int, v: int) -> int:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    if not is_connected(g):
        return 0
    rest = g.without_edge(u, v)
    if is_connected(rest):
        return count_spanning_trees_mt(g) - count_spanning_trees_mt(rest)
    # bridge: every spanning tree uses it; count via the contraction G/e
    lo, hi = min(u, v), max(u, v)

    def relabel(x: int) -> int:
        x = lo if x == hi else x
        return x - 1 if x > hi else x

    contracted = [(relabel(a), relabel(b)) for a, b in g.edges() if (a, b) != (lo, hi)]
    return _kirchhoff(g.node_count - 1, contracted)

