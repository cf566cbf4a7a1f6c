"""Minimum k-Vertex Cover: representative families, SubgraphGen + DP, color coding, greedy."""

from .repfamily import RepFamily, rep_family_build, rep_pick
from .solver import (
    Coloring,
    auto_trials,
    branching_stats,
    dp_from_catalog,
    greedy_min,
    leaf_catalog,
    min_kvc_fptas,
    multicolored_min_kvc,
    replay_branch,
    replay_decomposition,
)
from .subgraph import INF, DpTable, SubgraphGenerator, color_mask, dp_combine, subgraph_gen

__all__ = [
    "RepFamily",
    "rep_family_build",
    "rep_pick",
    "Coloring",
    "DpTable",
    "INF",
    "SubgraphGenerator",
    "subgraph_gen",
    "dp_combine",
    "color_mask",
    "multicolored_min_kvc",
    "min_kvc_fptas",
    "auto_trials",
    "greedy_min",
    "leaf_catalog",
    "dp_from_catalog",
    "replay_branch",
    "replay_decomposition",
    "branching_stats",
]
