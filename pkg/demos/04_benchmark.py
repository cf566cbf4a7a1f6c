"""
Benchmark grid
==============

Run every solver over seeded random instances and compare with the exact
optimum wherever brute force is affordable.
"""

# %%
from kvcover.bench import bench, summarize
from kvcover.instances import gen_random

instances = [(f"random-{s}", gen_random(11, 0.4, seed=s)) for s in range(8)]
algorithms = ["fptas-max", "greedy-max", "pipeline-max", "min-kvc", "greedy-min"]
reports = list(bench(instances, algorithms, ks=[1, 2, 3], epsilons=[0.3, 1.0], seed=0))
print(len(reports), "cells")

# %%
# Worst realized ratio per algorithm (value / optimum)
for name, s in summarize(reports).items():
    print(f"{name:<14} {s['sense']}  cells={s['cells']:3d}  worst={s['worst_ratio']:.4f}  time={s['wall_time']:.2f}s")
