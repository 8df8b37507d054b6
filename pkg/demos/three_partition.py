"""
From 3-partition to a two-type matching instance
================================================

Each number ``a`` of a 3-partition input becomes a machine, and jobs come in
two kinds whose tolerances are ``a`` and ``2a``.  All jobs can be placed
exactly when the numbers split into triples with equal sums.
"""

# %%
from pdmatch import classify, solve_const_m
from pdmatch.generators import gen_3partition, three_partition_exists

A, B, k = (26, 30, 31, 33, 36, 44), 100, 2
inst = gen_3partition(A, B, k)
rep = classify(inst)
print(f"{inst.n} jobs, {inst.m} machines, {rep.type_count} job types, "
      f"monotonizable={rep.monotonizable}")
print("distinct rows:", [p.tau for p in rep.type_profiles])

# %%
match = solve_const_m(inst)
print(f"yes-instance: triples exist={three_partition_exists(A, B)}, "
      f"matched {match.size} of {inst.n}")
for i, jobs in enumerate(match.machine_jobs(inst.m)):
    print(f"  machine {i} (a={A[i]}): {len(jobs)} jobs")

# %%
# A valid input with no split: every element must lie strictly between
# B/4 and B/2, which rules out 25 for B = 100.
A_no = (26, 26, 26, 26, 47, 49)
inst_no = gen_3partition(A_no, B, k)
print(f"no-instance: triples exist={three_partition_exists(A_no, B)}, "
      f"matched {solve_const_m(inst_no).size} of {inst_no.n}")
