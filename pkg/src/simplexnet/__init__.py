"""Exact invariants of the simplicial network family G_q(g)."""

from .closed_form import FactoredPolynomial, MatchingProfile, PreconditionError
from .generator import (
    FamilyParams,
    IntegralityError,
    SizeGuardError,
    build_corona,
    build_join,
    degree_census,
    edge_count,
    node_count,
)
from .graph import Graph, GraphBuilder, GraphError
from .oracles import BudgetExceeded, OracleBudget
from .verify import CHECKS, CheckSpec, VerificationReport, report_render, run_grid

__all__ = [
    "BudgetExceeded",
    "CHECKS",
    "CheckSpec",
    "FactoredPolynomial",
    "FamilyParams",
    "Graph",
    "GraphBuilder",
    "GraphError",
    "IntegralityError",
    "MatchingProfile",
    "OracleBudget",
    "PreconditionError",
    "SizeGuardError",
    "VerificationReport",
    "build_corona",
    "build_join",
    "degree_census",
    "edge_count",
    "node_count",
    "report_render",
    "run_grid",
]
