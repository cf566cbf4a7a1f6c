"""
kvcover: weighted Maximum / Minimum k-Vertex Cover.

Approximation schemes parameterized by k, approximate kernels, a Max
2SAT-with-cardinality reduction, greedy baselines and exhaustive oracles.
"""

from . import maxkvc, minkvc, oracle
from .errors import *  # noqa: F401,F403
from .graph import (
    Solution,
    WeightedGraph,
    as_vertex_set,
    covered_weight,
    cross_weight,
    degree_order,
    induced_subgraph,
    wdeg_set,
)
from .maxkvc import (
    fptas_max,
    greedy_max,
    kernel_unweighted,
    kernel_weighted,
    lift_solution,
    solve_via_2sat_pipeline,
    to_max2sat_cc,
)
from .minkvc import greedy_min, min_kvc_fptas, multicolored_min_kvc
from .oracle import brute_max_kvc, brute_min_kvc, brute_multicolored_min_kvc

__version__ = "0.1.0"
