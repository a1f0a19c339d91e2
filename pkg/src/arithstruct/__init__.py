"""Exact-arithmetic toolkit for arithmetical structures on loopless multigraphs."""

from .bounds import BoundReport, divisor_count, general_bound, mkn_bound, nicolas_f, r1_bound
from .egyptian import (
    UnitFractionRep,
    enumerate_unit_fractions,
    f_n_count,
    fractions_to_structure,
    structure_to_fractions,
)
from .mkn import DecStructure, enumerate_dec_mkn, enumerate_mk2, lift_check
from .multigraph import (
    Multigraph,
    complete_multigraph,
    cycle,
    degree,
    edge_count,
    from_matrix,
    is_connected,
    path,
)
from .reduction import ReductionStep, reduce_chain, reduce_graph, reduce_structure
from .structures import (
    ArithStructure,
    EnumerationResult,
    d_from_r,
    enumerate_brute,
    generalized_laplacian,
    nullspace_rank_check,
    verify,
)

__all__ = [
    "ArithStructure",
    "BoundReport",
    "DecStructure",
    "EnumerationResult",
    "Multigraph",
    "ReductionStep",
    "UnitFractionRep",
    "complete_multigraph",
    "cycle",
    "d_from_r",
    "degree",
    "divisor_count",
    "edge_count",
    "enumerate_brute",
    "enumerate_dec_mkn",
    "enumerate_mk2",
    "enumerate_unit_fractions",
    "f_n_count",
    "fractions_to_structure",
    "from_matrix",
    "general_bound",
    "generalized_laplacian",
    "is_connected",
    "lift_check",
    "mkn_bound",
    "nicolas_f",
    "nullspace_rank_check",
    "path",
    "r1_bound",
    "reduce_chain",
    "reduce_graph",
    "reduce_structure",
    "structure_to_fractions",
    "verify",
]
