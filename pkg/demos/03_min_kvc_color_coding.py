"""
Minimum k-vertex cover by color coding
======================================

The minimization side is harder: there is no small prefix to search.
Instead a branching procedure grows connected-ish pieces along heavy
edges, a DP over color subsets glues pieces with disjoint colors, and
random colorings remove the color constraint.
"""

# %%
from kvcover import brute_min_kvc, brute_multicolored_min_kvc, greedy_min
from kvcover import min_kvc_fptas, multicolored_min_kvc
from kvcover.instances import gen_random
from kvcover.minkvc import auto_trials, branching_stats, rep_family_build, rep_pick

# %%
# Representative families: keep only subsets of a short prefix of the heaviest elements
fam = rep_family_build([8, 4, 2, 1, 1, 1], delta=0.5)
for j in range(3):
    print(f"size {j}: {fam.count(j)} members, e.g. {list(fam.members(j))[:4]}")
print("pick for {3, 4, 5}:", rep_pick(fam, {3, 4, 5}))

# %%
# One fixed coloring
G = gen_random(10, 0.5, seed=21)
k, eps = 3, 0.5
colors = [v % k + 1 for v in G.vertices]
exact = brute_multicolored_min_kvc(G, k, colors)
approx = multicolored_min_kvc(G, k, colors, eps)
print("colorful optimum", exact.members, exact.value)
print("DP answer       ", approx.members, approx.value, "certified estimate", approx.estimate)

# %%
# Random colorings: ceil(e^k ln(1/p)) trials make the optimum colorful w.h.p.
print("auto trials for k=3:", auto_trials(3))
opt = brute_min_kvc(G, k)
sol = min_kvc_fptas(G, k, eps, seed=0)
print("optimum", opt.value, " color coding", sol.value, " greedy", greedy_min(G, k).value)

# %%
# The branching tree stays small; its size is reported, not asserted
print(branching_stats(G, k, eps))
