"""Independent brute-force references used across the test modules."""

from __future__ import annotations

import itertools

import numpy as np

from pdmatch import Instance


def brute_opt(inst: Instance) -> int:
    """Plain enumeration over all (m+1)^n assignments, no pruning."""
    b = inst.b
    best = 0
    for assign in itertools.product(range(-1, inst.m), repeat=inst.n):
        deg = [0] * inst.m
        for i in assign:
            if i >= 0:
                deg[i] += 1
        if all(i < 0 or deg[i] <= b[j, i] for j, i in enumerate(assign)):
            best = max(best, sum(1 for i in assign if i >= 0))
    return best


def brute_monotonizable(b: np.ndarray) -> bool:
    b = np.asarray(b)
    n, m = b.shape
    for rows in itertools.permutations(range(n)):
        br = b[list(rows)]
        if np.any(np.diff(br, axis=0) < 0):
            continue
        for cols in itertools.permutations(range(m)):
            if np.all(np.diff(br[:, list(cols)], axis=1) >= 0):
                return True
    return False
