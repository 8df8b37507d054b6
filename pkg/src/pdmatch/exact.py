"""Optimal algorithms for the tractable instance classes.

Every solver checks its class precondition and raises
:class:`~pdmatch.errors.ClassMismatchError` instead of silently falling back;
only :func:`pdmatch.dispatch.dispatch` chooses between algorithms.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterator, Sequence

import numpy as np

from .classes import ClassReport, classify, type_profiles
from .errors import BudgetExceededError, ClassMismatchError
from .greedy import best_load
from .instance import Instance, Matching, _require_valid
from .oracle import matching_for_thresholds, threshold_candidates
from .primitives import b_matching_assign, general_matching_mates

DEFAULT_CONST_M_BUDGET = 10**7
DEFAULT_MONO3_BUDGET = 10**6
DEFAULT_TYPES_BUDGET = 10**7


def _positive_values(report: ClassReport) -> list[int]:
    return [k for k in report.tolerance_set if k > 0]


def _in_monotone_order(inst: Instance, report: ClassReport, name: str):
    if report.monotone_order is None:
        raise ClassMismatchError(f"{name}: instance is not monotonizable")
    rows, cols = report.monotone_order
    return inst.permuted(rows, cols), rows, cols


# ---------------------------------------------------------------------------
# V-dependent and {0, k} tolerances


def _capped_b_matching(inst: Instance, caps: Sequence[int]) -> Matching:
    b = inst.b
    adj = [np.flatnonzero(b[j]).tolist() for j in range(inst.n)]
    return Matching.from_assignment(b_matching_assign(adj, list(caps)))


def solve_vdep(inst: Instance) -> Matching:
    """Machine ``i`` accepts up to ``b_i`` of the jobs with ``b[j, i] = b_i``."""
    report = classify(inst)
    if not report.is_vdep:
        raise ClassMismatchError("vdep: some machine has two different non-zero tolerances")
    return _capped_b_matching(inst, [cap for cap, _ in report.vdep_params])


def solve_zero_k(inst: Instance) -> Matching:
    """Tolerances in ``{0, k}``: every machine is a cap-``k`` bin."""
    values = _positive_values(classify(inst))
    if len(values) > 1:
        raise ClassMismatchError(f"zero-k: positive tolerances {values} are not a single value")
    if not values:
        return Matching()
    return _capped_b_matching(inst, [values[0]] * inst.m)


def solve_uniform_tolerance(inst: Instance) -> Matching:
    """Every entry equals ``k >= 1``: fill machines with ``k`` jobs each."""
    if inst.n == 0 or inst.m == 0:
        return Matching()
    tset = classify(inst).tolerance_set
    if len(tset) != 1 or tset[0] < 1:
        raise ClassMismatchError(f"uniform: tolerance set {list(tset)} is not a single positive value")
    k = tset[0]
    return Matching(frozenset((j, j // k) for j in range(min(inst.n, k * inst.m))))


# ---------------------------------------------------------------------------
# U-dependent tolerances


def solve_udep_complete(inst: Instance) -> Matching:
    """Identical machines: jobs by decreasing tolerance, each machine takes
    the longest feasible prefix of what is left."""
    if inst.n == 0 or inst.m == 0:
        return Matching()
    report = classify(inst)
    if not report.udep_complete:
        raise ClassMismatchError("udep-complete: rows must be constant and positive")
    tol = inst.b[:, 0]
    order = np.argsort(-tol, kind="stable")
    ranked = tol[order]
    assign = np.full(inst.n, -1, dtype=np.int64)
    pos = 0
    for i in range(inst.m):
        k = best_load(ranked[pos:])
        if k == 0:
            break
        assign[order[pos:pos + k]] = i
        pos += k
    return Matching.from_assignment(assign)


def udep_mono_sweep(tol: Sequence[int], start: Sequence[int], m: int) -> list[int]:
    """Two-pointer sweep on a monotone U-dependent instance in compact form.

    ``tol`` holds job tolerances in non-decreasing order and ``start[j]`` is
    the first machine job ``j`` may use (its allowed set is ``start[j]..m-1``,
    so ``start`` is non-increasing).  The most tolerant remaining job goes to
    the current machine while there is room; otherwise the machine pointer
    moves on.  Returns the machine of every job or -1.
    """
    n = len(tol)
    assign = [-1] * n
    j = n - 1
    i = 0
    deg = 0
    while j >= 0 and i < m:
        if i >= start[j] and deg < tol[j]:
            assign[j] = i
            deg += 1
            j -= 1
        else:
            i += 1
            deg = 0
    return assign


def solve_udep_mono_compact(tol: Sequence[int], start: Sequence[int], m: int) -> np.ndarray:
    """Validated array entry point for large monotone U-dependent instances
    that would not fit as a dense matrix."""
    tol_a = np.asarray(tol, dtype=np.int64)
    start_a = np.asarray(start, dtype=np.int64)
    if tol_a.shape != start_a.shape or tol_a.ndim != 1:
        raise ValueError("tol and start must be 1-D arrays of equal length")
    if tol_a.size and (np.any(np.diff(tol_a) < 0) or np.any(np.diff(start_a) > 0)):
        raise ClassMismatchError("udep-mono: tol must be non-decreasing and start non-increasing")
    if tol_a.size and (tol_a.min() < 0 or start_a.min() < 0 or start_a.max() > m):
        raise ValueError("tolerances must be >= 0 and starts within [0, m]")
    return np.asarray(udep_mono_sweep(tol_a.tolist(), start_a.tolist(), m), dtype=np.int64)


def solve_udep_mono(inst: Instance) -> Matching:
    report = classify(inst)
    if not report.is_udep:
        raise ClassMismatchError("udep-mono: some job has two different non-zero tolerances")
    pb, rows, cols = _in_monotone_order(inst, report, "udep-mono")
    if inst.n == 0 or inst.m == 0:
        return Matching()
    tol = pb.b.max(axis=1)
    nonzero = pb.b > 0
    start = np.where(nonzero.any(axis=1), nonzero.argmax(axis=1), inst.m)
    assign = udep_mono_sweep(tol.tolist(), start.tolist(), inst.m)
    return Matching.from_assignment(assign).relabeled(rows, cols)


def solve_mono_general_greedy(inst: Instance) -> Matching:
    """The U-dependent sweep run on any monotone instance with the admission
    test ``deg(i) < b[j, i]``.  Valid, but only about half of optimal on bad
    inputs."""
    report = classify(inst)
    pb, rows, cols = _in_monotone_order(inst, report, "mono-greedy")
    b = pb.b.tolist()
    n, m = inst.n, inst.m
    assign = [-1] * n
    j, i, deg = n - 1, 0, 0
    while j >= 0 and i < m:
        if deg < b[j][i]:
            assign[j] = i
            deg += 1
            j -= 1
        else:
            i += 1
            deg = 0
    return Matching.from_assignment(assign).relabeled(rows, cols)


# ---------------------------------------------------------------------------
# Few machines: guess per-machine degree caps


def solve_const_m(inst: Instance, budget: int = DEFAULT_CONST_M_BUDGET) -> Matching:
    """Best b-matching over all cap vectors built from column values.

    Vectors whose optimistic bound (sum over machines of the cap or the number
    of jobs reaching it) cannot beat the incumbent are skipped.
    """
    cands = threshold_candidates(inst)
    total = math.prod(len(c) for c in cands)
    if total > budget:
        raise BudgetExceededError(f"const-m: {total} cap vectors exceed budget {budget}")
    n = inst.n
    b = inst.b
    # reach[i][t] = number of jobs with b[j, i] >= t
    reach = [{t: int(np.count_nonzero(b[:, i] >= t)) if t > 0 else 0 for t in c}
             for i, c in enumerate(cands)]
    best: list[int] = [-1] * n
    best_size = 0
    for vec in itertools.product(*cands):
        if best_size == n:
            break
        bound = sum(min(t, reach[i][t]) for i, t in enumerate(vec))
        if min(bound, n) <= best_size:
            continue
        mate = matching_for_thresholds(inst, vec)
        size = sum(1 for x in mate if x >= 0)
        if size > best_size:
            best_size, best = size, mate
    return Matching.from_assignment(best)


# ---------------------------------------------------------------------------
# Tolerances in {1, 2}


def _pairing_graph_mates(b: np.ndarray, x: int) -> list[int]:
    """Maximum matching of the gadget graph for ``x`` doubly-loaded machines.

    Vertices: jobs ``0..n-1``, machine halves ``n + 2i`` and ``n + 2i + 1``,
    then ``n - 2x`` fillers joined to every job.  Halves of a machine are
    joined to each other and to every job with tolerance 2 on it.
    """
    n, m = b.shape
    edges = []
    for i in range(m):
        h1, h2 = n + 2 * i, n + 2 * i + 1
        edges.append((h1, h2))
        for j in np.flatnonzero(b[:, i] == 2).tolist():
            edges.append((j, h1))
            edges.append((j, h2))
    base = n + 2 * m
    for f in range(n - 2 * x):
        for j in range(n):
            edges.append((j, base + f))
    return general_matching_mates(base + n - 2 * x, edges)


def _is_perfect(mates: list[int]) -> bool:
    return all(v >= 0 for v in mates)


def solve_one_two(inst: Instance) -> Matching:
    """Tolerances in ``{1, 2}``.

    Finds the largest ``x`` such that ``x`` machines can each host two jobs of
    tolerance 2 on them (a perfect-matching test on a gadget graph, monotone in
    ``x``, hence binary search), then gives one leftover job to every empty
    machine.  The result has ``min(n, m + x)`` jobs.
    """
    n, m = inst.n, inst.m
    if n == 0 or m == 0:
        return Matching()
    tset = classify(inst).tolerance_set
    if not set(tset) <= {1, 2}:
        raise ClassMismatchError(f"one-two: tolerance set {list(tset)} is not within {{1, 2}}")
    b = inst.b
    lo, hi = 0, min(n // 2, m)
    lo_mates = _pairing_graph_mates(b, 0)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        mates = _pairing_graph_mates(b, mid)
        if _is_perfect(mates):
            lo, lo_mates = mid, mates
        else:
            hi = mid - 1
    assign = [-1] * n
    empty = []
    for i in range(m):
        h1, h2 = n + 2 * i, n + 2 * i + 1
        if lo_mates[h1] < n and lo_mates[h1] != h2:
            assign[lo_mates[h1]] = i
            assign[lo_mates[h2]] = i
        else:
            empty.append(i)
    leftovers = [j for j in range(n) if assign[j] < 0]
    for j, i in zip(leftovers, empty):
        assign[j] = i
    return Matching.from_assignment(assign)


# ---------------------------------------------------------------------------
# Monotone instances with at most three tolerance values


def _gap_degrees(tset: Sequence[int], n: int) -> list[int]:
    """Degrees strictly between consecutive tolerance values, capped at n."""
    out = []
    for lo, hi in zip(tset, tset[1:]):
        out.extend(d for d in range(lo + 1, min(hi, n + 1)) if d > 0)
    return out


def _mono3_guess_count(n: int, m: int, gaps: int, special: int) -> int:
    per_vprime = sum(math.comb(m, s) * gaps**s for s in range(special + 1))
    return (n + 1) * (m + 1) * per_vprime


def _mono3_fill(b: list[list[int]], tset: Sequence[int], n_top: int, m_top: int,
                special: dict[int, int]) -> list[int]:
    """One guess: the ``n_top`` most tolerant jobs may be matched; machines
    outside the ``m_top`` most capable ones get ``k1`` jobs; machines in
    ``special`` get their target degree; the rest of the capable machines are
    filled greedily.  Works in monotone order (index grows with tolerance)."""
    n, m = len(b), len(b[0]) if b else 0
    k1 = tset[0]
    assign = [-1] * n
    pool = list(range(n - n_top, n))  # unmatched jobs, least tolerant first

    def take(jobs: list[int], machine: int) -> None:
        for j in jobs:
            assign[j] = machine
        taken = set(jobs)
        pool[:] = [j for j in pool if j not in taken]

    for i in range(m - m_top):
        if k1 > 0 and pool:
            take(pool[:k1], i)
    for i in sorted(special):
        tar = special[i]
        take([j for j in pool if b[j][i] >= tar][:tar], i)

    empty = [i for i in range(m - m_top, m) if i not in special]
    while pool and empty:
        j = pool[0]
        k = max(b[j][i] for i in empty)
        if k <= 0:
            break
        i = next(i for i in empty if b[j][i] >= k)
        empty.remove(i)
        take(pool[:k], i)
    return assign


def mono_three_tol_candidates(inst: Instance,
                              budget: int = DEFAULT_MONO3_BUDGET) -> Iterator[Matching]:
    """Yield the matching built for every guess, in original indices."""
    report = classify(inst)
    tset = report.tolerance_set
    if len(tset) > 3:
        raise ClassMismatchError(f"mono-3tol: {len(tset)} distinct tolerances, at most 3 allowed")
    pb, rows, cols = _in_monotone_order(inst, report, "mono-3tol")
    n, m = inst.n, inst.m
    if n == 0 or m == 0:
        yield Matching()
        return
    gaps = _gap_degrees(tset, n)
    special_max = min(2, len(tset) - 1)
    guesses = _mono3_guess_count(n, m, len(gaps), special_max)
    if guesses > budget:
        raise BudgetExceededError(f"mono-3tol: {guesses} guesses exceed budget {budget}")
    b = pb.b.tolist()
    for n_top in range(n + 1):
        for m_top in range(m + 1):
            capable = range(m - m_top, m)
            for s in range(min(special_max, m_top) + 1):
                for machines in itertools.combinations(capable, s):
                    for tars in itertools.product(gaps, repeat=s):
                        assign = _mono3_fill(b, tset, n_top, m_top, dict(zip(machines, tars)))
                        yield Matching.from_assignment(assign).relabeled(rows, cols)


def solve_mono_three_tol(inst: Instance, budget: int = DEFAULT_MONO3_BUDGET) -> Matching:
    best = Matching()
    for cand in mono_three_tol_candidates(inst, budget):
        if cand.size > best.size:
            best = cand
    return best


# ---------------------------------------------------------------------------
# Few job types


def shared_machines(inst: Instance, match: Matching) -> dict[tuple[int, int], list[int]]:
    """For every pair of job types, the machines hosting jobs of both."""
    type_of = np.empty(inst.n, dtype=np.int64)
    for t, prof in enumerate(type_profiles(inst.b)):
        type_of[list(prof.jobs)] = t
    hosted: list[set[int]] = [set() for _ in range(inst.m)]
    for j, i in match.edges:
        hosted[i].add(int(type_of[j]))
    out: dict[tuple[int, int], list[int]] = {}
    for i, types in enumerate(hosted):
        for pair in itertools.combinations(sorted(types), 2):
            out.setdefault(pair, []).append(i)
    return out


def normalize_shared_machines(inst: Instance, match: Matching) -> Matching:
    """Rearrange jobs so that for every pair of types at most one machine
    hosts both.

    For two machines sharing types ``a`` and ``c``, the smallest of the four
    (type, machine) counts is swapped away: those jobs move to the other
    machine and the same number of jobs of the other type come back.  Degrees
    do not change and every (type, machine) incidence only disappears, so the
    loop terminates with a matching of the same size.
    """
    _require_valid(inst, match)
    type_of = np.empty(inst.n, dtype=np.int64)
    for t, prof in enumerate(type_profiles(inst.b)):
        type_of[list(prof.jobs)] = t
    assign = match.assignment(inst.n)

    while True:
        shared = shared_machines(inst, Matching.from_assignment(assign))
        clash = next(((pair, ms) for pair, ms in sorted(shared.items()) if len(ms) > 1), None)
        if clash is None:
            break
        (ta, tc), (i1, i2) = clash[0], clash[1][:2]

        def on(t: int, i: int) -> list[int]:
            return [j for j in np.flatnonzero(assign == i).tolist() if type_of[j] == t]

        counts = {(ta, i1): on(ta, i1), (ta, i2): on(ta, i2),
                  (tc, i1): on(tc, i1), (tc, i2): on(tc, i2)}
        t_move, i_from = min(counts, key=lambda key: (len(counts[key]), key))
        t_back = tc if t_move == ta else ta
        i_to = i2 if i_from == i1 else i1
        movers = counts[(t_move, i_from)]
        returners = counts[(t_back, i_to)][:len(movers)]
        assign[movers] = i_to
        assign[returners] = i_from
    return Matching.from_assignment(assign)


def _count_vectors(t: int, limit: int) -> list[tuple[int, ...]]:
    """All vectors of ``t`` non-negative ints with sum in ``1..limit``."""
    out = []
    for total in range(1, limit + 1):
        for cut in itertools.combinations(range(total + t - 1), t - 1):
            parts = []
            prev = -1
            for c in cut + (total + t - 1,):
                parts.append(c - prev - 1)
                prev = c
            out.append(tuple(parts))
    return out


def _mixed_loads(taus: list[tuple[int, ...]], i: int, n: int) -> list[tuple[int, ...]]:
    """Feasible per-type counts with two or more types on machine ``i``."""
    t = len(taus)
    cap = min(n, max(tau[i] for tau in taus))
    out = []
    for vec in _count_vectors(t, cap):
        used = [ell for ell in range(t) if vec[ell] > 0]
        if len(used) >= 2 and sum(vec) <= min(taus[ell][i] for ell in used):
            out.append(vec)
    return out


def types_work_estimate(inst: Instance, max_t: int = 3) -> int:
    profiles = type_profiles(inst.b)
    t = len(profiles)
    if t > max_t:
        return math.inf
    states = math.prod(p.count + 1 for p in profiles)
    cap = min(inst.n, int(inst.b.max(initial=0)))
    mixed = math.comb(cap + t, t) if t >= 2 else 0
    return states * (t * (t - 1) + 1) * max(inst.m, 1) * (t + 1 + mixed)


def solve_t_types(inst: Instance, max_t: int = 3,
                  budget: int = DEFAULT_TYPES_BUDGET) -> Matching:
    """Dynamic program over machines for instances with few distinct rows.

    State: jobs of each type still unassigned, plus the number of machines
    already used for mixed loads (bounded by ``t(t-1)``, as at most one
    machine per pair of types needs to mix).  A machine is left empty, takes
    ``min(remaining, tolerance)`` jobs of one type, or takes a feasible mixed
    load.  Enumerating the mixed machines and their loads and then running the
    single-type knapsack recursion on the rest explores the same choices; the
    DP just shares the work between guesses.
    """
    profiles = type_profiles(inst.b)
    t = len(profiles)
    if t > max_t:
        raise BudgetExceededError(f"t-types: {t} job types exceed max_t={max_t}")
    if inst.n == 0 or inst.m == 0:
        return Matching()
    work = types_work_estimate(inst, max_t)
    if work > budget:
        raise BudgetExceededError(f"t-types: estimated work {work} exceeds budget {budget}")
    taus = [p.tau for p in profiles]
    mix_limit = t * (t - 1)

    # layer: state -> (value, previous state, load vector on this machine)
    start = (tuple(p.count for p in profiles), 0)
    layer: dict[tuple, int] = {start: 0}
    back: list[dict[tuple, tuple]] = []
    for i in range(inst.m):
        singles = []
        for ell in range(t):
            if taus[ell][i] > 0:
                singles.append(ell)
        mixed = _mixed_loads(taus, i, inst.n) if t >= 2 else []
        nxt: dict[tuple, int] = {}
        ptr: dict[tuple, tuple] = {}

        def offer(state, value, prev, load):
            if value > nxt.get(state, -1):
                nxt[state] = value
                ptr[state] = (prev, load)

        for state in sorted(layer):
            value = layer[state]
            rem, used = state
            offer(state, value, state, None)
            for ell in singles:
                c = min(rem[ell], taus[ell][i])
                if c > 0:
                    load = tuple(c if x == ell else 0 for x in range(t))
                    new = tuple(r - x for r, x in zip(rem, load))
                    offer((new, used), value + c, state, load)
            if used < mix_limit:
                for load in mixed:
                    if all(x <= r for x, r in zip(load, rem)):
                        new = tuple(r - x for r, x in zip(rem, load))
                        offer((new, used + 1), value + sum(load), state, load)
        layer = nxt
        back.append(ptr)

    state = max(sorted(layer), key=lambda s: layer[s])
    loads: list[tuple | None] = [None] * inst.m
    for i in range(inst.m - 1, -1, -1):
        prev, load = back[i][state]
        loads[i] = load
        state = prev

    assign = [-1] * inst.n
    queues = [list(p.jobs) for p in profiles]
    for i, load in enumerate(loads):
        if load is None:
            continue
        for ell, c in enumerate(load):
            for _ in range(c):
                assign[queues[ell].pop(0)] = i
    return Matching.from_assignment(assign)


def solve_two_types(inst: Instance, budget: int = DEFAULT_TYPES_BUDGET) -> Matching:
    if len(type_profiles(inst.b)) > 2:
        raise ClassMismatchError("two-types: instance has more than two job types")
    return solve_t_types(inst, max_t=2, budget=budget)
