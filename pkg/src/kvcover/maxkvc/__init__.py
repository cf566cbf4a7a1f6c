"""Maximum k-Vertex Cover: FPT-AS, approximate kernels, greedy and the 2SAT-CC pipeline."""

from .fptas import fptas_max, greedy_max, prefix_size
from .kernel import KernelResult, kernel_unweighted, kernel_weighted, lift_solution
from .twosat import (
    Max2SatCCInstance,
    brute_force_2sat_cc,
    format_wcnf_cc,
    local_search_2sat_cc,
    parse_wcnf_cc,
    satisfied_weight,
    solve_via_2sat_pipeline,
    to_max2sat_cc,
)

__all__ = [
    "fptas_max",
    "greedy_max",
    "prefix_size",
    "KernelResult",
    "kernel_weighted",
    "kernel_unweighted",
    "lift_solution",
    "Max2SatCCInstance",
    "to_max2sat_cc",
    "satisfied_weight",
    "format_wcnf_cc",
    "parse_wcnf_cc",
    "local_search_2sat_cc",
    "brute_force_2sat_cc",
    "solve_via_2sat_pipeline",
]
