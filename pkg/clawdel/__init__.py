from .models import Algorithm, BipartiteGraph, ClawWitness, Hypergraph, SplitGraph
from .claw import find_claw, find_claw_split, is_feasible, is_minimal, reverse_delete
from .solvers import (
    SolveReport,
    local_ratio_solve,
    max_subgraph_solve,
    primal_dual_solve,
    split_solve,
    theta_of_solution,
)
from .oracle import exact_min_osbcd, exact_min_vc_graph, exact_min_vc_hypergraph, exact_max_subgraph
from .reductions import (
    Direction,
    ReductionMap,
    hvc_to_osbcd,
    map_solution,
    osbcd_to_split,
    split_to_osbcd,
    vc_to_dense_osbcd,
)
from .generate import Family, GenSpec, generate

__all__ = [
    "Algorithm", "BipartiteGraph", "ClawWitness", "Hypergraph", "SplitGraph",
    "find_claw", "find_claw_split", "is_feasible", "is_minimal", "reverse_delete",
    "SolveReport", "local_ratio_solve", "max_subgraph_solve", "primal_dual_solve",
    "split_solve", "theta_of_solution",
    "exact_min_osbcd", "exact_min_vc_graph", "exact_min_vc_hypergraph", "exact_max_subgraph",
    "Direction", "ReductionMap", "hvc_to_osbcd", "map_solution", "osbcd_to_split",
    "split_to_osbcd", "vc_to_dense_osbcd",
    "Family", "GenSpec", "generate",
]
