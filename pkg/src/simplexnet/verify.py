"""Grid verification: closed forms against oracles on built graphs."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Iterable

from . import closed_form as cf
from .canonical import are_isomorphic
from .generator import (
    FamilyParams,
    SizeGuardError,
    build_corona,
    build_join,
    degree_census,
    empirical_census,
    node_count,
    resolve_max_nodes,
)
from .graph import Graph, rank_nullity, triangle_count
from .oracles import (
    MAX_DETERMINANT_NODES,
    BudgetExceeded,
    OracleBudget,
    chromatic_number_oracle,
    chromatic_polynomial_dc,
    count_acyclic_orientations,
    count_perfect_matchings,
    count_proper_colorings,
    count_root_connected_acyclic,
    count_spanning_trees_mt,
    dominates,
    matching_profile_oracle,
    max_independent_set,
    min_dominating_set,
    vacancy_profile,
)

CHECKS = (
    "independence",
    "domination",
    "chromatic-number",
    "chromatic-poly",
    "acyclic",
    "root-connected-acyclic",
    "perfect-matchings",
    "matching-profile",
    "spanning-trees",
    "construction-equivalence",
    "degree-census",
    "tutte-identity",
)

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped-budget"
NOT_APPLICABLE = "not-applicable"
STATUSES = (PASS, FAIL, SKIPPED, NOT_APPLICABLE)

DEFAULT_GRID = tuple(sorted({(q, g) for q in (1, 2, 3) for g in (0, 1)} | {(1, 2)}))

# largest graph on which construction-equivalence runs the canonical-form search
CANONICAL_MAX_NODES = 40

REPORT_SCHEMA = {
    "type": "object",
    "required": ["cells"],
    "properties": {
        "cells": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["q", "g", "check", "status", "closed_form", "oracle", "ms", "reason"],
                "additionalProperties": False,
                "properties": {
                    "q": {"type": "integer", "minimum": 1},
                    "g": {"type": "integer", "minimum": 0},
                    "check": {"enum": list(CHECKS)},
                    "status": {"enum": list(STATUSES)},
                    "closed_form": {"type": "string", "pattern": "^-?[0-9]+$"},
                    "oracle": {"type": ["string", "null"], "pattern": "^-?[0-9]+$"},
                    "ms": {"type": "integer", "minimum": 0},
                    "reason": {"type": ["string", "null"]},
                },
            },
        }
    },
}


@dataclass(frozen=True)
class CheckSpec:
    check: str
    params: FamilyParams
    budget: OracleBudget = field(default_factory=OracleBudget)

    def __post_init__(self):
        if self.check not in CHECKS:
            raise ValueError(f"unknown check {self.check!r}; choose from {', '.join(CHECKS)}")


@dataclass(frozen=True)
class CellResult:
    spec: CheckSpec
    status: str
    closed_form: int
    oracle: int | None
    ms: int = 0
    reason: str | None = None

    @property
    def sort_key(self):
        return (self.spec.params.q, self.spec.params.g, self.spec.check)


@dataclass
class VerificationReport:
    cells: list[CellResult]

    def count(self, status: str) -> int:
        return sum(1 for c in self.cells if c.status == status)

    @property
    def failures(self) -> list[CellResult]:
        return [c for c in self.cells if c.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures


class _Outcome(Exception):
    """Short-circuit carrying a non-comparison status out of a check body."""

    def __init__(self, status: str, closed: int, reason: str):
        super().__init__(reason)
        self.status, self.closed, self.reason = status, closed, reason


@lru_cache(maxsize=32)
def _graph(q: int, g: int, max_nodes: int) -> Graph:
    return build_corona(FamilyParams(q, g), max_nodes=max_nodes)


# Each check returns (closed_form, oracle, problem) where problem is None on
# agreement beyond plain equality, or a string describing the mismatch.
CheckFn = Callable[[FamilyParams, Graph, OracleBudget], tuple[int, int, str | None]]


def _independence(p, graph, budget):
    return cf.independence_number(p), max_independent_set(graph, budget), None


def _domination(p, graph, budget):
    closed = cf.domination_number(p)
    problem = None
    if p.g == 1:
        hubs = list(range(p.q + 2))
        if not all(dominates(graph, sub) for sub in combinations(hubs, p.q + 1)):
            problem = "some (q+1)-subset of hubs does not dominate G_q(1)"
    return closed, min_dominating_set(graph, budget), problem


def _chromatic_number(p, graph, budget):
    return cf.chromatic_number(p), chromatic_number_oracle(graph, budget), None


def _chromatic_poly(p, graph, budget):
    poly = cf.chromatic_polynomial(p)
    top = p.q + 3
    counts = {lam: count_proper_colorings(graph, lam, budget) for lam in range(top + 1)}
    problem = None
    bad = [lam for lam, c in counts.items() if poly(lam) != c]
    if bad:
        problem = f"coloring counts differ at lambda={bad}"
    elif graph.edge_count <= budget.max_edges:
        if chromatic_polynomial_dc(graph, budget) != poly.expand():
            problem = "deletion-contraction coefficients differ"
    return int(poly(top)), counts[top], problem


def _acyclic(p, graph, budget):
    return cf.acyclic_orientations(p), count_acyclic_orientations(graph, budget), None


def _root_connected(p, graph, budget):
    return cf.root_connected_acyclic(p), count_root_connected_acyclic(graph, 0, budget), None


def _perfect_matchings(p, graph, budget):
    if p.q % 2:
        if graph.node_count % 2:
            return 0, count_perfect_matchings(graph, budget), None
        raise _Outcome(NOT_APPLICABLE, 0, "odd q with even node count: no closed form")
    return cf.perfect_matchings(p), count_perfect_matchings(graph, budget), None


def _matching_profile(p, graph, budget):
    if p.q % 2:
        raise _Outcome(NOT_APPLICABLE, 0, "matching profile is defined for even q only")
    closed = cf.matching_profile_recursive(p)
    seen = matching_profile_oracle(graph, 0, 1, budget)
    vacancy = vacancy_profile(graph, 0, 1, budget)
    problem = None
    if vacancy["h1"] or vacancy["h2"]:
        problem = f"matchings with exactly one hub vacant: {vacancy['h1']}, {vacancy['h2']}"
    elif seen.B != closed.B:
        problem = f"perfect matchings {seen.B} != {closed.B}"
    elif seen.B != seen.A * (p.q + 1) ** (p.g + 1):
        problem = f"ratio B/A = {seen.ratio} != (q+1)^(g+1)"
    return closed.A, seen.A, problem


def _spanning_trees(p, graph, budget):
    if graph.node_count > MAX_DETERMINANT_NODES:
        raise BudgetExceeded(f"{graph.node_count} nodes exceeds determinant limit {MAX_DETERMINANT_NODES}")
    closed = cf.spanning_trees(p)
    problem = None
    if cf.spanning_trees_recursive(p) != closed:
        problem = "recursive spanning-tree count differs from closed form"
    return closed, count_spanning_trees_mt(graph), problem


def _construction_equivalence(p, graph, budget):
    if graph.node_count > MAX_DETERMINANT_NODES:
        raise BudgetExceeded(f"{graph.node_count} nodes exceeds determinant limit {MAX_DETERMINANT_NODES}")
    join = build_join(p)
    problem = None
    if (join.node_count, join.edge_count) != (graph.node_count, graph.edge_count):
        problem = "node/edge counts differ"
    elif sorted(join.degrees()) != sorted(graph.degrees()):
        problem = "degree sequences differ"
    elif triangle_count(join) != triangle_count(graph):
        problem = "triangle counts differ"
    elif count_spanning_trees_mt(join) != count_spanning_trees_mt(graph):
        problem = "spanning-tree counts differ"
    elif graph.node_count <= CANONICAL_MAX_NODES and not are_isomorphic(join, graph):
        problem = "canonical forms differ"
    return node_count(p), join.node_count, problem


def _degree_census(p, graph, budget):
    census = degree_census(p)
    seen = empirical_census(graph)
    problem = None if seen == census else "degree census differs from built graph"
    return sum(r.degree * r.count for r in census), sum(graph.degrees()), problem


def _tutte_identity(p, graph, budget):
    rank, _nullity = rank_nullity(graph)
    k = graph.node_count - rank
    order = rank + k
    chrom = cf.chromatic_polynomial(p)
    derived = cf.chromatic_from_tutte(cf.tutte_x_axis(p), k, order)
    problem = None if derived == chrom else f"{derived} != {chrom}"
    lam = p.q + 3
    return int(chrom(lam)), int(derived(lam)), problem


_RUNNERS: dict[str, CheckFn] = {
    "independence": _independence,
    "domination": _domination,
    "chromatic-number": _chromatic_number,
    "chromatic-poly": _chromatic_poly,
    "acyclic": _acyclic,
    "root-connected-acyclic": _root_connected,
    "perfect-matchings": _perfect_matchings,
    "matching-profile": _matching_profile,
    "spanning-trees": _spanning_trees,
    "construction-equivalence": _construction_equivalence,
    "degree-census": _degree_census,
    "tutte-identity": _tutte_identity,
}

_CLOSED_ONLY: dict[str, Callable[[FamilyParams], int]] = {
    "independence": cf.independence_number,
    "domination": cf.domination_number,
    "chromatic-number": cf.chromatic_number,
    "chromatic-poly": lambda p: int(cf.chromatic_polynomial(p)(p.q + 3)),
    "acyclic": cf.acyclic_orientations,
    "root-connected-acyclic": cf.root_connected_acyclic,
    "perfect-matchings": lambda p: cf.perfect_matchings(p) if p.q % 2 == 0 else 0,
    "matching-profile": lambda p: cf.matching_profile_recursive(p).A if p.q % 2 == 0 else 0,
    "spanning-trees": cf.spanning_trees,
    "construction-equivalence": node_count,
    "degree-census": lambda p: 2 * (cf.clique_edges(p.q) ** (p.g + 1)),
    "tutte-identity": lambda p: int(cf.chromatic_polynomial(p)(p.q + 3)),
}


def run_cell(spec: CheckSpec, timed: bool = True) -> CellResult:
    p = spec.params
    start = time.perf_counter()

    def elapsed() -> int:
        return int((time.perf_counter() - start) * 1000) if timed else 0

    try:
        graph = _graph(p.q, p.g, resolve_max_nodes())
        closed, oracle, problem = _RUNNERS[spec.check](p, graph, spec.budget)
    except _Outcome as out:
        return CellResult(spec, out.status, out.closed, None, elapsed(), out.reason)
    except (BudgetExceeded, SizeGuardError) as exc:
        closed = _CLOSED_ONLY[spec.check](p)
        return CellResult(spec, SKIPPED, closed, None, elapsed(), str(exc))
    if closed != oracle:
        return CellResult(spec, FAIL, closed, oracle, elapsed(), "closed form and oracle disagree")
    if problem:
        return CellResult(spec, FAIL, closed, oracle, elapsed(), problem)
    return CellResult(spec, PASS, closed, oracle, elapsed(), None)


def _run_cell_untimed(spec: CheckSpec) -> CellResult:
    return run_cell(spec, timed=False)


def grid_cells(q_values: Iterable[int], g_values: Iterable[int]) -> list[tuple[int, int]]:
    return sorted(set(product(q_values, g_values)))


def run_grid(
    q_range: Iterable[int] | None = None,
    g_range: Iterable[int] | None = None,
    checks: Iterable[str] | None = None,
    budget: OracleBudget | None = None,
    *,
    cells: Iterable[tuple[int, int]] | None = None,
    workers: int = 1,
    timed: bool = True,
) -> VerificationReport:
    """Attempt every (q, g, check) combination and collect the outcomes.

    ``cells`` overrides the q/g product; with neither given the default grid
    (q in 1..3, g in 0..1, plus (1, 2)) is used. Results are ordered by
    (q, g, check) regardless of ``workers``.
    """
    budget = budget or OracleBudget()
    if cells is None:
        if q_range is None and g_range is None:
            cells = DEFAULT_GRID
        else:
            q_values = list(q_range) if q_range is not None else [1, 2, 3]
            g_values = list(g_range) if g_range is not None else [0, 1]
            if not q_values or not g_values:
                raise ValueError("q and g ranges must be non-empty")
            cells = grid_cells(q_values, g_values)
    names = list(checks) if checks is not None else list(CHECKS)
    specs = [CheckSpec(c, FamilyParams(q, g), budget) for q, g in sorted(set(cells)) for c in names]
    runner = run_cell if timed else _run_cell_untimed
    if workers > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(runner, specs))
    else:
        results = [runner(s) for s in specs]
    return VerificationReport(sorted(results, key=lambda c: c.sort_key))


# ---------------------------------------------------------------- rendering


def _cell_record(c: CellResult) -> dict:
    return {
        "q": c.spec.params.q,
        "g": c.spec.params.g,
        "check": c.spec.check,
        "status": c.status,
        "closed_form": str(c.closed_form),
        "oracle": None if c.oracle is None else str(c.oracle),
        "ms": c.ms,
        "reason": c.reason,
    }


_CSV_FIELDS = ["q", "g", "check", "status", "closed_form", "oracle", "ms", "reason"]


def _abbrev(value: str, width: int = 24) -> str:
    if len(value) <= width:
        return value
    return f"{value[:10]}...({len(value)} digits)"


def report_render(report: VerificationReport, fmt: str = "text") -> bytes:
    records = [_cell_record(c) for c in report.cells]
    if fmt == "json":
        return (json.dumps({"cells": records}, indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=_CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for r in records:
            writer.writerow({k: "" if r[k] is None else r[k] for k in _CSV_FIELDS})
        return buf.getvalue().encode()
    if fmt == "text":
        lines = [f"{'q':>2} {'g':>2}  {'check':<26}{'status':<16}{'closed form':<26}{'oracle':<26}ms"]
        for r in records:
            oracle = "-" if r["oracle"] is None else _abbrev(r["oracle"])
            lines.append(
                f"{r['q']:>2} {r['g']:>2}  {r['check']:<26}{r['status']:<16}"
                f"{_abbrev(r['closed_form']):<26}{oracle:<26}{r['ms']}"
            )
            if r["reason"] and r["status"] != PASS:
                lines.append(f"{'':6}{r['reason']}")
        lines.append(
            f"{len(records)} cells: {report.count(PASS)} pass, {report.count(FAIL)} fail, "
            f"{report.count(SKIPPED)} skipped-budget, {report.count(NOT_APPLICABLE)} not-applicable"
        )
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown report format {fmt!r}")


def report_from_json(data: bytes | str, budget: OracleBudget | None = None) -> VerificationReport:
    """Inverse of ``report_render(..., "json")``; budgets are not serialized."""
    budget = budget or OracleBudget()
    payload = json.loads(data)
    cells = []
    for r in payload["cells"]:
        spec = CheckSpec(r["check"], FamilyParams(r["q"], r["g"]), budget)
        oracle = None if r["oracle"] is None else int(r["oracle"])
        cells.append(CellResult(spec, r["status"], int(r["closed_form"]), oracle, r["ms"], r["reason"]))
    return VerificationReport(cells)
