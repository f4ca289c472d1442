"""Acceptance criteria, one test function (possibly parametrized) per criterion.

Every comparison is exact integer equality. ``conftest.py`` prints a single
PASS/FAIL line per criterion at the end of the run.
"""

import subprocess
import sys
from itertools import combinations

import networkx as nx
import pytest
import sympy

from simplexnet import closed_form as cf
from simplexnet.canonical import are_isomorphic
from simplexnet.generator import FamilyParams, build_corona, build_join, edge_count, node_count
from simplexnet.graph import complete_graph, rank_nullity
from simplexnet.oracles import (
    chromatic_polynomial_dc,
    count_acyclic_orientations,
    count_perfect_matchings,
    count_proper_colorings,
    count_root_connected_acyclic,
    count_spanning_trees_containing_edge,
    count_spanning_trees_mt,
    dominates,
    matching_profile_oracle,
    max_independent_set,
    min_dominating_set,
)
from simplexnet.verify import DEFAULT_GRID

P = FamilyParams


def corona(q, g):
    return build_corona(P(q, g))


# 1 ------------------------------------------------------------------ counts


@pytest.mark.parametrize("q, g", [(q, g) for q in (1, 2, 3, 4) for g in (0, 1, 2)])
def test_criterion_01_counts(q, g):
    p = P(q, g)
    for build in (build_corona, build_join):
        graph = build(p)
        assert graph.node_count == node_count(p)
        assert graph.edge_count == edge_count(p)


def test_criterion_01_counts_spot_values():
    assert (corona(2, 1).node_count, corona(2, 1).edge_count) == (16, 36)
    assert (corona(1, 2).node_count, corona(1, 2).edge_count) == (15, 27)


# 2 ------------------------------------------------------------------ construction equivalence


@pytest.mark.parametrize("q, g", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_criterion_02_construction_equivalence(q, g):
    a, b = build_corona(P(q, g)), build_join(P(q, g))
    assert sorted(a.degrees()) == sorted(b.degrees())
    assert count_spanning_trees_mt(a) == count_spanning_trees_mt(b)


@pytest.mark.parametrize("q, g", [(1, 1), (2, 1)])
def test_criterion_02_construction_isomorphism(q, g):
    assert are_isomorphic(build_corona(P(q, g)), build_join(P(q, g)))


# 3 ------------------------------------------------------------------ independence


@pytest.mark.parametrize("q, g, expected", [(1, 1, 3), (1, 2, 9), (2, 1, 6), (3, 1, 10)])
def test_criterion_03_independence(q, g, expected):
    assert max_independent_set(corona(q, g)) == cf.independence_number(P(q, g)) == expected


# 4 ------------------------------------------------------------------ domination


@pytest.mark.parametrize("q, g, expected", [(1, 1, 2), (2, 1, 3), (3, 1, 4), (1, 2, 3)])
def test_criterion_04_domination(q, g, expected):
    assert min_dominating_set(corona(q, g)) == cf.domination_number(P(q, g)) == expected


@pytest.mark.parametrize("q", [1, 2, 3, 4])
def test_criterion_04_hub_subset_dominates(q):
    graph = corona(q, 1)
    witnesses = [s for s in combinations(range(q + 2), q + 1) if dominates(graph, s)]
    assert witnesses
    assert len(witnesses[0]) == cf.domination_number(P(q, 1))


# 5 ------------------------------------------------------------------ chromatic


@pytest.mark.parametrize("q, g", [(1, 1), (2, 1)])
def test_criterion_05_chromatic_counts(q, g):
    graph = corona(q, g)
    poly = cf.chromatic_polynomial(P(q, g))
    for lam in (q + 1, q + 2, q + 3):
        assert count_proper_colorings(graph, lam) == poly(lam)
    assert count_proper_colorings(graph, q + 1) == 0
    assert count_proper_colorings(graph, q + 2) > 0


def test_criterion_05_chromatic_spot_value():
    assert count_proper_colorings(corona(2, 1), 4) == 1536


def test_criterion_05_deletion_contraction_coefficients():
    assert chromatic_polynomial_dc(corona(1, 1)) == cf.chromatic_polynomial(P(1, 1)).expand()


@pytest.mark.parametrize("q, g", [(1, 1), (2, 1), (3, 1), (1, 2)])
def test_criterion_05_chromatic_number_transition(q, g):
    graph = corona(q, g)
    chi = cf.chromatic_number(P(q, g))
    assert chi == q + 2
    assert count_proper_colorings(graph, chi - 1) == 0
    assert count_proper_colorings(graph, chi) > 0


# 6 ------------------------------------------------------------------ orientations


@pytest.mark.parametrize("q, g, ao, rao", [(1, 0, 6, 2), (2, 0, 24, 6), (3, 0, 120, 24), (1, 1, 162, 16)])
def test_criterion_06_orientations(q, g, ao, rao):
    graph = corona(q, g)
    assert count_acyclic_orientations(graph) == cf.acyclic_orientations(P(q, g)) == ao
    assert count_root_connected_acyclic(graph, 0) == cf.root_connected_acyclic(P(q, g)) == rao


def test_criterion_06_root_independence():
    graph = corona(1, 1)
    assert [count_root_connected_acyclic(graph, r) for r in range(graph.node_count)] == [16] * 6


# 7 ------------------------------------------------------------------ Tutte identity

TUTTE_GRID = sorted(set(DEFAULT_GRID) | {(q, g) for q in (1, 2, 3, 4) for g in (0, 1, 2)})


@pytest.mark.parametrize("q, g", TUTTE_GRID)
def test_criterion_07_tutte_identity(q, g):
    p = P(q, g)
    graph = corona(q, g)
    rank, _nullity = rank_nullity(graph)
    k = graph.node_count - rank
    n = rank + k  # vertex count; see the nullity variant in test_closed_form
    chrom = cf.chromatic_polynomial(p)
    tutte = cf.tutte_x_axis(p)
    assert cf.chromatic_from_tutte(tutte, k, n) == chrom
    for lam in range(-2, q + 5):
        assert chrom(lam) == (-lam) ** k * (-1) ** n * tutte(1 - lam)


@pytest.mark.parametrize("q", [1, 2, 3])
def test_criterion_07_tutte_axis_against_networkx(q):
    x, y = sympy.symbols("x y")
    reference = nx.tutte_polynomial(nx.complete_graph(q + 2)).subs(y, 0)
    mine = cf.tutte_x_axis(P(q, 0))
    for value in range(-3, 6):
        assert reference.subs(x, value) == mine(value)


# 8 ------------------------------------------------------------------ matchings


@pytest.mark.parametrize("g, expected", [(0, 3), (1, 27)])
def test_criterion_08_perfect_matchings(g, expected):
    assert count_perfect_matchings(corona(2, g)) == cf.perfect_matchings(P(2, g)) == expected


@pytest.mark.parametrize("g", [0, 1])
def test_criterion_08_matching_profile(g):
    seen = matching_profile_oracle(corona(2, g), 0, 1)
    closed = cf.matching_profile_recursive(P(2, g))
    assert (seen.A, seen.B) == (closed.A, closed.B)
    assert seen.B == seen.A * 3 ** (g + 1)


@pytest.mark.parametrize("g", [0, 2, 4])
def test_criterion_08_odd_order_parity(g):
    graph = corona(1, g)
    assert graph.node_count % 2 == 1
    assert count_perfect_matchings(graph) == 0


# 9 ------------------------------------------------------------------ spanning trees


@pytest.mark.parametrize("q, g, expected", [(1, 0, 3), (1, 1, 54), (2, 0, 16), (2, 1, None), (1, 2, None), (3, 0, 125)])
def test_criterion_09_spanning_trees(q, g, expected):
    closed = cf.spanning_trees(P(q, g))
    assert count_spanning_trees_mt(corona(q, g)) == closed
    if expected is not None:
        assert closed == expected


@pytest.mark.parametrize("q", [1, 2, 3])
def test_criterion_09_recursion_matches_closed_form(q):
    for g in range(7):
        assert cf.spanning_trees_recursive(P(q, g)) == cf.spanning_trees(P(q, g))


# 10 ----------------------------------------------------------------- trees through an edge of K_q


@pytest.mark.parametrize("q", [3, 4, 5, 6, 7])
def test_criterion_10_trees_through_edge_of_complete_graph(q):
    got = count_spanning_trees_containing_edge(complete_graph(q), 0, 1)
    assert got == cf.forests_separating_pair_in_complete(q) == 2 * q ** (q - 3)


# 11 ----------------------------------------------------------------- integrality


def test_criterion_11_integrality_sweep():
    for q in range(1, 7):
        for g in range(9):
            p = P(q, g)
            for key, value in cf.exponent_table(p).items():
                assert value.denominator == 1, (q, g, key, value)
            # the accessors go through the integrality assertion
            cf.chromatic_exponent(p)
            cf.spanning_tree_exponents(p)
            cf.domination_number(p)
            node_count(p)
            if q % 2 == 0:
                cf.matching_exponent(p)


# 12 ----------------------------------------------------------------- determinism


def _cli(*argv) -> bytes:
    return subprocess.run(
        [sys.executable, "-m", "simplexnet", *argv], check=False, capture_output=True
    ).stdout


@pytest.mark.parametrize("fmt", ["edgelist", "dot", "json"])
def test_criterion_12_generate_is_byte_identical(fmt):
    argv = ("generate", "--q", "2", "--g", "2", "--format", fmt)
    first = _cli(*argv)
    assert first and first == _cli(*argv)


@pytest.mark.parametrize("fmt", ["text", "json", "csv"])
def test_criterion_12_verify_is_byte_identical(fmt):
    argv = ("verify", "--format", fmt)
    first = _cli(*argv)
    assert first and first == _cli(*argv)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
