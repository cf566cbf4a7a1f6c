"""
Maximum k-vertex cover: the degree-prefix scheme
================================================

Pick k vertices so the edges they touch weigh as much as possible.  Only
the top ``k + ceil(k / eps)`` vertices by weighted degree need to be
searched to get within a ``(1 - eps)`` factor of the optimum.
"""

# %%
# A small weighted instance
import math

from kvcover import brute_max_kvc, fptas_max, greedy_max
from kvcover.instances import gen_random
from kvcover.maxkvc import prefix_size

G = gen_random(16, 0.35, weights="int", seed=3)
print(G, "total weight", G.total_weight)

# %%
# How big is the prefix for a few accuracy levels?
k = 3
for eps in (0.1, 0.3, 0.5, 1.0):
    print(f"eps={eps:<4} prefix of {prefix_size(G.n, k, eps):2d} of {G.n} vertices")

# %%
# Compare against the exhaustive optimum and against greedy
opt = brute_max_kvc(G, k)
print("optimum  ", opt.members, opt.value)
for eps in (0.1, 0.5, 1.0):
    sol = fptas_max(G, k, eps)
    print(f"eps={eps:<4}", sol.members, sol.value, f"ratio {sol.value / opt.value:.3f}")
g = greedy_max(G, k)
print("greedy   ", g.members, g.value, f"(guaranteed >= {1 - 1 / math.e:.3f} of the optimum)")
