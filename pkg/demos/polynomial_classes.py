"""
Tour of the tractable classes
=============================

``classify`` reports which structure an instance has, and ``solve`` with
``algorithm="auto"`` picks an exact method for it.  Each block below builds one
instance per class and checks the answer against brute force.
"""

# %%
import numpy as np

from pdmatch import Instance, classify, oracle_enumerate_assignments, solve
from pdmatch.generators import (fixture_monobad, gen_from_values, gen_monotone_from_values,
                                gen_typed, gen_udep, gen_vdep)

examples = {
    "uniform tolerance": Instance(np.full((7, 3), 2, dtype=np.int64)),
    "machine-dependent": gen_vdep(7, 3, 4, seed=1),
    "job-dependent, all machines": gen_udep(7, 3, 4, 0.0, seed=2, complete=True),
    "job-dependent, nested": gen_udep(7, 3, 4, seed=3, monotone=True),
    "tolerances 1 and 2": gen_from_values(7, 3, (1, 2), seed=4),
    "monotone, three values": gen_monotone_from_values(7, 3, (1, 2, 4), seed=5),
    "three job types": gen_typed(7, 3, 3, 4, seed=6),
}

for label, inst in examples.items():
    rep = solve(inst)
    opt = oracle_enumerate_assignments(inst).size
    print(f"{label:30s} {classify(inst).flags():22s} -> {rep.algorithm:14s} "
          f"size {rep.size} (brute force {opt})")

# %%
# Being monotone is not enough for the simple sweep that works on nested
# job-dependent instances: here it stops at k + 1 while 2k jobs fit.
for k in (2, 4, 6):
    inst = fixture_monobad(k)
    print(f"k={k}: sweep {solve(inst, 'mono-greedy').size}, "
          f"three-value search {solve(inst, 'mono-3tol').size}")
