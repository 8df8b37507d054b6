"""Brute-force ground truth for small instances.

Two unrelated searches are provided so that a defect in the b-matching engine
cannot leak into both sides of a comparison:

* :func:`oracle_enumerate_assignments` walks over every job-to-machine
  assignment (branch and bound, no matching engine involved);
* :func:`oracle_threshold_vectors` tries every per-machine degree cap and
  solves the resulting b-matching problem.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .errors import BudgetExceededError
from .greedy import greedy_strongly_maximal
from .instance import Instance, Matching
from .primitives import b_matching_assign

DEFAULT_ASSIGNMENT_BUDGET = 10**8
DEFAULT_THRESHOLD_BUDGET = 10**7


def assignment_space(inst: Instance) -> int:
    return (inst.m + 1) ** inst.n


def oracle_enumerate_assignments(inst: Instance,
                                 budget: int = DEFAULT_ASSIGNMENT_BUDGET) -> Matching:
    """Maximum PD-matching by exhaustive assignment search.

    Raises :class:`BudgetExceededError` when ``(m + 1) ** n`` exceeds ``budget``.
    """
    n, m = inst.n, inst.m
    if assignment_space(inst) > budget:
        raise BudgetExceededError(f"(m+1)^n = {m + 1}^{n} exceeds budget {budget}")
    b = inst.b
    rows = [j for j in range(n) if b[j].max(initial=0) > 0]
    rows.sort(key=lambda j: (-int(b[j].max()), j))
    tol = [b[j].tolist() for j in rows]
    count = len(rows)
    # suffix maxima: best tolerance any not-yet-placed job offers each machine
    rem_max = [[0] * m for _ in range(count + 1)]
    for p in range(count - 1, -1, -1):
        rem_max[p] = [max(a, c) for a, c in zip(rem_max[p + 1], tol[p])]

    start = greedy_strongly_maximal(inst)
    best_size = start.size
    best_assign = start.assignment(n).tolist()
    if best_size == count:
        return start

    deg = [0] * m
    floor = [math.inf] * m
    cur = [-1] * n

    def bound(p: int, size: int) -> int:
        room = 0
        rm = rem_max[p]
        for i in range(m):
            r = min(floor[i], rm[i]) - deg[i]
            if r > 0:
                room += r
        return size + min(count - p, room)

    def search(p: int, size: int) -> bool:
        nonlocal best_size, best_assign
        if size > best_size:
            best_size = size
            best_assign = cur.copy()
            if best_size == count:
                return True
        if p == count or bound(p, size) <= best_size:
            return False
        j = rows[p]
        row = tol[p]
        for i in range(m):
            if deg[i] + 1 <= min(floor[i], row[i]):
                old = floor[i]
                deg[i] += 1
                floor[i] = min(old, row[i])
                cur[j] = i
                done = search(p + 1, size + 1)
                cur[j] = -1
                deg[i] -= 1
                floor[i] = old
                if done:
                    return True
        return search(p + 1, size)

    search(0, 0)
    return Matching.from_assignment(best_assign)


def threshold_candidates(inst: Instance) -> list[list[int]]:
    """Per machine, 0 plus every distinct positive entry of its column.

    An optimal matching's degree on machine ``i`` can be raised to the smallest
    tolerance among its jobs on ``i``, which is one of these values, without
    losing any of those jobs.
    """
    return [[0] + sorted(int(v) for v in np.unique(inst.b[:, i]) if v > 0)
            for i in range(inst.m)]


def matching_for_thresholds(inst: Instance, thresholds) -> list[int]:
    """Maximum b-matching on edges ``b[j, i] >= t_i`` with caps ``t_i``."""
    b = inst.b
    adj = []
    for j in range(inst.n):
        row = b[j]
        adj.append([i for i, t in enumerate(thresholds) if t > 0 and row[i] >= t])
    return b_matching_assign(adj, list(thresholds))


def oracle_threshold_vectors(inst: Instance,
                             budget: int = DEFAULT_THRESHOLD_BUDGET) -> Matching:
    """Maximum PD-matching by trying every candidate degree-cap vector."""
    cands = threshold_candidates(inst)
    total = math.prod(len(c) for c in cands)
    if total > budget:
        raise BudgetExceededError(f"{total} threshold vectors exceed budget {budget}")
    best: list[int] = [-1] * inst.n
    best_size = 0
    for vec in itertools.product(*cands):
        if sum(vec) <= best_size:
            continue
        mate = matching_for_thresholds(inst, vec)
        size = sum(1 for x in mate if x >= 0)
        if size > best_size:
            best_size = size
            best = mate
    return Matching.from_assignment(best)
