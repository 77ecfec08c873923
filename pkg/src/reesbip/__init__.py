"""Rees algebras of edge ideals of bipartite graphs.

Universal Gröbner bases from walks, an independent circuits oracle,
Buchberger over arbitrary monomial orders, and exact Koszul Betti numbers
for the Rees algebra and for powers of the edge ideal.
"""

from __future__ import annotations

from .betti import (
    BettiTable,
    bounds_report,
    koszul_betti_power,
    koszul_betti_rees,
    linearity_check,
    power_regularity,
    rees_dimension,
    reg_stats,
)
from .graph import (
    BipartiteGraph,
    Matching,
    complete_bipartite,
    cycle_graph,
    example_graph,
    load_graph,
    maximal_matchings,
    maximum_matching,
    min_vertex_cover,
    minimum_maximal_matching,
    named_graph,
    parse_graph,
    path_graph,
)
from .groebner import normal_form, rees_groebner_basis, verify_ugb
from .monomials import Binomial, Monomial
from .orders import GrevLex, Lex, MatchProduct, WeightOrder, match_order, sample_orders
from .walks import circuit_binomials, circuits, universal_groebner_basis

__all__ = [
    "BettiTable",
    "Binomial",
    "BipartiteGraph",
    "GrevLex",
    "Lex",
    "MatchProduct",
    "Matching",
    "Monomial",
    "WeightOrder",
    "bounds_report",
    "circuit_binomials",
    "circuits",
    "complete_bipartite",
    "cycle_graph",
    "example_graph",
    "koszul_betti_power",
    "koszul_betti_rees",
    "linearity_check",
    "load_graph",
    "match_order",
    "maximal_matchings",
    "maximum_matching",
    "min_vertex_cover",
    "minimum_maximal_matching",
    "named_graph",
    "normal_form",
    "parse_graph",
    "path_graph",
    "power_regularity",
    "rees_dimension",
    "rees_groebner_basis",
    "reg_stats",
    "sample_orders",
    "universal_groebner_basis",
    "verify_ugb",
]

__version__ = "0.1.0"
