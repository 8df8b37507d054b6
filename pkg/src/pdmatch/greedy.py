"""Greedy construction of strongly-maximal PD-matchings (half-approximations)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .instance import Instance, Matching

LOW = "low"
HIGH = "high"


@dataclass(frozen=True)
class GreedyConfig:
    """Machine visiting order and tie-break among jobs of equal tolerance.

    ``machine_order=None`` means ascending machine index.  ``job_tiebreak`` is
    ``"low"`` (lowest job index first) or ``"high"``.
    """

    machine_order: tuple[int, ...] | None = None
    job_tiebreak: str = LOW

    def __post_init__(self) -> None:
        if self.job_tiebreak not in (LOW, HIGH):
            raise ValueError(f"job_tiebreak must be 'low' or 'high', got {self.job_tiebreak!r}")
        if self.machine_order is not None:
            object.__setattr__(self, "machine_order", tuple(int(i) for i in self.machine_order))

    def order(self, m: int) -> Sequence[int]:
        if self.machine_order is None:
            return range(m)
        if sorted(self.machine_order) != list(range(m)):
            raise ValueError(f"machine_order {self.machine_order} is not a permutation of range({m})")
        return self.machine_order


def best_load(sorted_desc: np.ndarray) -> int:
    """Largest ``k`` with at least ``k`` values ``>= k`` in a descending array."""
    if sorted_desc.size == 0:
        return 0
    return int(np.count_nonzero(sorted_desc >= np.arange(1, sorted_desc.size + 1)))


def greedy_strongly_maximal(inst: Instance, cfg: GreedyConfig | None = None) -> Matching:
    """Visit machines one at a time and give each the largest feasible group of
    the most tolerant unmatched jobs."""
    cfg = cfg or GreedyConfig()
    b = inst.b
    free = np.arange(inst.n)
    assign = np.full(inst.n, -1, dtype=np.int64)
    for i in cfg.order(inst.m):
        if free.size == 0:
            break
        col = b[free, i]
        if cfg.job_tiebreak == LOW:
            idx = np.argsort(-col, kind="stable")
        else:
            # reversed stable sort keeps equal values in descending job order
            idx = np.argsort(-col[::-1], kind="stable")
            idx = free.size - 1 - idx
        k = best_load(col[idx])
        if k == 0:
            continue
        chosen = idx[:k]
        assign[free[chosen]] = i
        keep = np.ones(free.size, dtype=bool)
        keep[chosen] = False
        free = free[keep]
    return Matching.from_assignment(assign)


def greedy_global(inst: Instance, tiebreak: str = LOW) -> Matching:
    """Repeatedly add the admissible pair with the globally largest tolerance.

    A pair ``(j, i)`` is admissible while ``j`` is unmatched and
    ``deg(i) < b[j, i]``.  Admissibility never returns once lost, so one pass
    over all pairs in order of decreasing tolerance is equivalent.  Ties go to
    the lexicographically smallest ``(job, machine)`` with ``tiebreak="low"``
    and to the largest with ``"high"``.
    """
    if tiebreak not in (LOW, HIGH):
        raise ValueError(f"tiebreak must be 'low' or 'high', got {tiebreak!r}")
    b = inst.b
    jobs, machines = np.nonzero(b)
    vals = b[jobs, machines]
    if tiebreak == LOW:
        order = np.lexsort((machines, jobs, -vals))
    else:
        order = np.lexsort((-machines, -jobs, -vals))
    deg = [0] * inst.m
    assign = [-1] * inst.n
    for p in order.tolist():
        j = int(jobs[p])
        i = int(machines[p])
        if assign[j] < 0 and deg[i] < vals[p]:
            assign[j] = i
            deg[i] += 1
    return Matching.from_assignment(assign)
