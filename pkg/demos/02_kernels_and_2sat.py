"""
Approximate kernels and the 2SAT-with-cardinality view
======================================================

The weighted kernel keeps the degree prefix and folds weight toward
discarded vertices into self-loops, so every subset keeps its exact
coverage.  The unweighted kernel stays loop-free by routing that weight to
padded vertices instead.  Either kernel can be handed to any Max 2SAT solver
with a cardinality constraint.
"""

# %%
from kvcover import WeightedGraph, covered_weight, kernel_unweighted, kernel_weighted, lift_solution
from kvcover import brute_max_kvc, solve_via_2sat_pipeline, to_max2sat_cc
from kvcover.maxkvc import brute_force_2sat_cc, format_wcnf_cc
from kvcover.instances import gen_random

G = gen_random(14, 0.4, seed=8)
k, eps = 2, 0.5

# %%
# Weighted kernel: exact coverage on every kept subset
kr = kernel_weighted(G, k, eps)
print(f"kept {kr.reduced.n} of {G.n} vertices, map reduced -> original {kr.id_map}")
S = [0, 2]
print("E'(S) =", covered_weight(kr.reduced, S), " E(map(S)) =", covered_weight(G, lift_solution(kr, S)))

# %%
# The reduced instance in wcnf-cc form (first lines)
print("\n".join(format_wcnf_cc(to_max2sat_cc(kr.reduced, k)).splitlines()[:5]))

# %%
# The pipeline with the default local search and with an exact solver
print("optimum          ", brute_max_kvc(G, k).value)
print("local search     ", solve_via_2sat_pipeline(G, k, eps).value)
print("exact 2SAT solver", solve_via_2sat_pipeline(G, k, eps, solver=brute_force_2sat_cc).value)

# %%
# Unweighted kernel on a graph with a hub
U = gen_random(20, 0.15, seed=2, unweighted=True)
hub = [(0, v, 1.0) for v in range(1, 20) if U.weight(0, v) == 0.0]
U = WeightedGraph(20, list(U.edges()) + hub)
ku = kernel_unweighted(U, 3, 0.5)
print("committed", ku.committed, "residual k", ku.reduced_k,
      "kernel size", ku.reduced.n, "padded", ku.num_padded, "simple", ku.reduced.is_unweighted_simple())
inner = brute_max_kvc(ku.reduced, ku.reduced_k).members
lifted = lift_solution(ku, inner)
print("lifted", lifted, covered_weight(U, lifted), "optimum", brute_max_kvc(U, 3).value)
