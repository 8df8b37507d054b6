"""
Reading a 3-dimensional matching off an optimal schedule
========================================================

Every triple becomes a machine.  Y and Z elements are jobs that tolerate two
jobs on the triples containing them; an X element in ``t`` triples adds
``t - 1`` filler jobs that tolerate only one.  Matching every job forces
exactly ``k`` machines to hold a Y-Z pair, and those machines form the
3-dimensional matching.
"""

# %%
from pdmatch import oracle_enumerate_assignments
from pdmatch.generators import TripleSystem, extract_3dm_solution, gen_3dm, max_tuple_matching

systems = {
    "has a perfect matching": TripleSystem(2, [(0, 0, 0), (0, 1, 1), (1, 1, 1)]),
    "Y element 1 never used": TripleSystem(2, [(0, 0, 0), (1, 0, 1), (0, 0, 1)]),
}

for label, ts in systems.items():
    red = gen_3dm(ts)
    opt = oracle_enumerate_assignments(red.instance)
    target = len(ts.triples) + ts.k
    print(f"{label}: {red.instance.n} jobs on {red.instance.m} machines, "
          f"optimum {opt.size}, target {target}")
    print("  tolerance matrix:")
    for row in red.instance.b.tolist():
        print("   ", row)
    if opt.size == target:
        print("  recovered triples:", sorted(extract_3dm_solution(red, opt)))
    else:
        print("  largest partial matching:", max_tuple_matching(ts.triples))
