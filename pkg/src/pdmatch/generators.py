"""Seeded instance factories, hardness-reduction constructions and the named
fixtures used throughout the tests.

All random generators take an integer ``seed`` and draw from
``numpy.random.default_rng(seed)``, so equal arguments give equal instances.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidMatchingError
from .instance import Instance, Matching, verify


def _check_dims(n: int, m: int, max_tol: int = 1) -> None:
    if n < 0 or m < 0:
        raise ValueError(f"n and m must be non-negative, got n={n}, m={m}")
    if max_tol < 1:
        raise ValueError(f"max_tol must be >= 1, got {max_tol}")


def gen_random(n: int, m: int, max_tol: int, zero_prob: float = 0.0, seed: int = 0) -> Instance:
    """Entries are 0 with probability ``zero_prob``, otherwise uniform on ``1..max_tol``."""
    _check_dims(n, m, max_tol)
    if not 0.0 <= zero_prob <= 1.0:
        raise ValueError(f"zero_prob must lie in [0, 1], got {zero_prob}")
    rng = np.random.default_rng(seed)
    vals = rng.integers(1, max_tol + 1, size=(n, m))
    zeros = rng.random((n, m)) < zero_prob
    return Instance(np.where(zeros, 0, vals))


def gen_monotonous(n: int, m: int, max_tol: int, seed: int = 0) -> Instance:
    """Monotone matrix from 2-D prefix sums of random non-negative increments,
    rescaled into ``0..max_tol`` (a non-decreasing map keeps monotonicity)."""
    _check_dims(n, m, max_tol)
    rng = np.random.default_rng(seed)
    if n == 0 or m == 0:
        return Instance(np.zeros((n, m), dtype=np.int64))
    inc = rng.integers(0, 3, size=(n, m))
    acc = inc.cumsum(axis=0).cumsum(axis=1)
    top = acc.max()
    if top == 0:
        return Instance(acc)
    return Instance((acc * max_tol) // top)


def gen_from_values(n: int, m: int, values: Sequence[int], seed: int = 0) -> Instance:
    """Entries drawn uniformly from ``values`` (e.g. ``(1, 2)`` or ``(0, 3)``)."""
    _check_dims(n, m)
    rng = np.random.default_rng(seed)
    return Instance(rng.choice(np.asarray(values, dtype=np.int64), size=(n, m)))


def gen_monotone_from_values(n: int, m: int, values: Sequence[int], seed: int = 0) -> Instance:
    """Monotone matrix whose entries all come from ``values``; rows and columns
    are shuffled afterwards so the order has to be recovered."""
    _check_dims(n, m)
    rng = np.random.default_rng(seed)
    vals = np.sort(np.unique(np.asarray(values, dtype=np.int64)))
    levels = gen_monotonous(n, m, len(vals) - 1 if len(vals) > 1 else 1,
                            seed=int(rng.integers(2**31))).b
    levels = np.minimum(levels, len(vals) - 1)
    b = vals[levels]
    return Instance(b[rng.permutation(n)][:, rng.permutation(m)])


def gen_vdep(n: int, m: int, max_tol: int, zero_prob: float = 0.3, seed: int = 0) -> Instance:
    """Machine ``i`` has one tolerance ``b_i``; each job is allowed on it with
    probability ``1 - zero_prob``."""
    _check_dims(n, m, max_tol)
    rng = np.random.default_rng(seed)
    caps = rng.integers(1, max_tol + 1, size=m)
    allowed = rng.random((n, m)) >= zero_prob
    return Instance(np.where(allowed, caps[None, :], 0))


def gen_udep(n: int, m: int, max_tol: int, zero_prob: float = 0.3, seed: int = 0,
             complete: bool = False, monotone: bool = False) -> Instance:
    """Job ``j`` has one tolerance ``b_j`` on its allowed machines.

    ``complete`` allows every job on every machine.  ``monotone`` makes the
    allowed sets nested suffixes in tolerance order, then shuffles rows and
    columns.
    """
    _check_dims(n, m, max_tol)
    rng = np.random.default_rng(seed)
    tol = rng.integers(1, max_tol + 1, size=n)
    if complete:
        return Instance(np.repeat(tol[:, None], m, axis=1))
    if monotone:
        tol = np.sort(tol)
        start = np.sort(rng.integers(0, m + 1, size=n))[::-1]
        b = np.where(np.arange(m)[None, :] >= start[:, None], tol[:, None], 0)
        return Instance(b[rng.permutation(n)][:, rng.permutation(m)])
    allowed = rng.random((n, m)) >= zero_prob
    return Instance(np.where(allowed, tol[:, None], 0))


def gen_udep_mono_compact(n: int, m: int, max_tol: int, seed: int = 0):
    """Compact monotone U-dependent instance: sorted tolerances and the first
    allowed machine of every job.  Suitable for sizes where ``n * m`` entries
    would not fit in memory."""
    _check_dims(n, m, max_tol)
    rng = np.random.default_rng(seed)
    tol = np.sort(rng.integers(1, max_tol + 1, size=n))
    start = np.sort(rng.integers(0, m + 1, size=n))[::-1]
    return tol, start.copy()


def gen_typed(n: int, m: int, types: int, max_tol: int, zero_prob: float = 0.0,
              seed: int = 0) -> Instance:
    """At most ``types`` distinct rows, each job picking one at random."""
    _check_dims(n, m, max_tol)
    if types < 1:
        raise ValueError("types must be >= 1")
    rng = np.random.default_rng(seed)
    vals = rng.integers(1, max_tol + 1, size=(types, m))
    vals = np.where(rng.random((types, m)) < zero_prob, 0, vals)
    return Instance(vals[rng.integers(0, types, size=n)])


# ---------------------------------------------------------------------------
# 3-partition


def check_three_partition_input(A: Sequence[int], B: int, k: int) -> None:
    problems = []
    if len(A) != 3 * k:
        problems.append(f"|A| = {len(A)} but 3k = {3 * k}")
    if sum(A) != k * B:
        problems.append(f"sum(A) = {sum(A)} but kB = {k * B}")
    bad = [x for x in A if not (4 * x > B and 2 * x < B)]
    if bad:
        problems.append(f"elements {bad} not strictly between B/4 and B/2")
    if problems:
        raise ValueError("invalid 3-partition input: " + "; ".join(problems))


def gen_3partition(A: Sequence[int], B: int, k: int) -> Instance:
    """Type ``l`` (``l = 1..k``) contributes ``l * B`` jobs whose row is ``l * A``.

    Machines follow the order of ``A``; with ``A`` sorted the instance is
    monotone.  A matching covering all jobs exists iff ``A`` splits into ``k``
    triples of sum ``B``.
    """
    check_three_partition_input(A, B, k)
    a = np.asarray(A, dtype=np.int64)
    rows = [np.repeat((ell * a)[None, :], ell * B, axis=0) for ell in range(1, k + 1)]
    return Instance(np.vstack(rows) if rows else np.zeros((0, len(A)), dtype=np.int64))


def three_partition_exists(A: Sequence[int], B: int) -> bool:
    """Exhaustive search for a split of ``A`` into triples summing to ``B``."""
    items = sorted(A)
    if len(items) % 3:
        return False

    def rec(rest: list[int]) -> bool:
        if not rest:
            return True
        first, others = rest[0], rest[1:]
        for p, q in itertools.combinations(range(len(others)), 2):
            if first + others[p] + others[q] == B:
                left = [x for r, x in enumerate(others) if r not in (p, q)]
                if rec(left):
                    return True
        return False

    return rec(items)


# ---------------------------------------------------------------------------
# 3-dimensional matching


@dataclass(frozen=True)
class TripleSystem:
    k: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "triples", tuple(tuple(int(x) for x in t) for t in self.triples))
        for t in self.triples:
            if len(t) != 3 or not all(0 <= x < self.k for x in t):
                raise ValueError(f"triple {t} out of range for k={self.k}")
        if len(set(self.triples)) != len(self.triples):
            raise ValueError("duplicate triple")
        for axis in range(3):
            over = [e for e, c in Counter(t[axis] for t in self.triples).items() if c > 3]
            if over:
                raise ValueError(f"elements {over} on axis {axis} occur more than 3 times")


@dataclass(frozen=True)
class ThreeDMReduction:
    """Instance built from a triple system plus the bookkeeping needed to map
    matchings back.  Jobs ``0..k-1`` are the Y elements, ``k..2k-1`` the Z
    elements, and the rest are fillers; ``filler_owner[r]`` is the X element
    of filler ``2k + r``.  Machine ``i`` stands for ``system.triples[i]``."""

    instance: Instance
    system: TripleSystem
    filler_owner: tuple[int, ...]

    @property
    def element_jobs(self) -> range:
        return range(2 * self.system.k)


def gen_3dm(ts: TripleSystem) -> ThreeDMReduction:
    """Jobs for Y and Z elements have tolerance 2 on the triples containing
    them.  Each X element ``a`` occurring in ``t_a`` triples gets ``t_a - 1``
    fillers with tolerance 1 on exactly those triples.  A perfect 3-D matching
    exists iff all ``m + k`` jobs can be matched."""
    k, trip = ts.k, ts.triples
    m = len(trip)
    occ = Counter(t[0] for t in trip)
    missing = [a for a in range(k) if occ[a] == 0]
    if missing:
        raise ValueError(f"X elements {missing} occur in no triple")
    owners = tuple(a for a in range(k) for _ in range(occ[a] - 1))
    b = np.zeros((2 * k + len(owners), m), dtype=np.int64)
    for i, (x, y, z) in enumerate(trip):
        b[y, i] = 2
        b[k + z, i] = 2
    for r, a in enumerate(owners):
        for i, t in enumerate(trip):
            if t[0] == a:
                b[2 * k + r, i] = 1
    return ThreeDMReduction(Instance(b), ts, owners)


def extract_3dm_solution(red: ThreeDMReduction, match: Matching) -> set[tuple[int, int, int]]:
    """Triples whose machines carry two jobs."""
    report = verify(red.instance, match)
    if not report.valid:
        raise InvalidMatchingError(f"not a PD-matching of the reduction: {report.violations[0]}")
    deg = match.degrees(red.instance.m)
    return {red.system.triples[i] for i in np.flatnonzero(deg == 2).tolist()}


def max_tuple_matching(tuples: Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Largest set of pairwise coordinate-disjoint tuples, by exhaustive search."""
    tuples = list(tuples)
    best: list[tuple[int, ...]] = []

    def rec(p: int, chosen: list[tuple[int, ...]], used: list[set[int]]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        if p == len(tuples) or len(chosen) + len(tuples) - p <= len(best):
            return
        t = tuples[p]
        if all(x not in used[a] for a, x in enumerate(t)):
            for a, x in enumerate(t):
                used[a].add(x)
            chosen.append(t)
            rec(p + 1, chosen, used)
            chosen.pop()
            for a, x in enumerate(t):
                used[a].discard(x)
        rec(p + 1, chosen, used)

    arity = len(tuples[0]) if tuples else 0
    rec(0, [], [set() for _ in range(arity)])
    return best


def is_tuple_matching(tuples: Sequence[tuple[int, ...]]) -> bool:
    if not tuples:
        return True
    arity = len(next(iter(tuples)))
    return all(len({t[a] for t in tuples}) == len(tuples) for a in range(arity))


# ---------------------------------------------------------------------------
# d-dimensional matching


@dataclass(frozen=True)
class TupleSystem:
    d: int
    k: int
    tuples: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tuples", tuple(tuple(int(x) for x in t) for t in self.tuples))
        for t in self.tuples:
            if len(t) != self.d or not all(0 <= x < self.k for x in t):
                raise ValueError(f"tuple {t} invalid for d={self.d}, k={self.k}")
        if len(set(self.tuples)) != len(self.tuples):
            raise ValueError("duplicate tuple")
        for axis in range(self.d):
            over = [e for e, c in Counter(t[axis] for t in self.tuples).items() if c > self.d]
            if over:
                raise ValueError(f"elements {over} on axis {axis} occur more than {self.d} times")


def gen_ddm(ts: TupleSystem, k1: int, k2: int) -> Instance:
    """Element job ``(axis, x)`` has tolerance ``k2`` on tuples containing it and
    ``k1`` elsewhere; ``k1 * (t - k)`` fillers have tolerance ``k1`` everywhere.
    Every job can be matched iff the system has a perfect matching."""
    if ts.d != k2:
        raise ValueError(f"tuple arity {ts.d} must equal k2={k2}")
    if k1 < 1 or k2 <= max(2, k1):
        raise ValueError(f"need k1 >= 1 and k2 > max(2, k1), got k1={k1}, k2={k2}")
    t = len(ts.tuples)
    if t < ts.k:
        raise ValueError(f"need at least k={ts.k} tuples, got {t}")
    rows = []
    for axis in range(ts.d):
        for x in range(ts.k):
            rows.append([k2 if tup[axis] == x else k1 for tup in ts.tuples])
    rows.extend([[k1] * t for _ in range(k1 * (t - ts.k))])
    return Instance.from_rows(rows, m=t)


# ---------------------------------------------------------------------------
# Named fixtures


def fixture_ir(r: int) -> Instance:
    """One job of tolerance 1 and ``r`` jobs of tolerance ``r`` on one machine:
    the single edge of the first job is maximal yet ``r`` times too small."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return Instance.from_rows([[1]] + [[r]] * r)


def fixture_tight(k: int) -> Instance:
    """``k`` jobs allowed only on machine 1 and ``k`` jobs allowed on both, all
    with tolerance ``k``.  Greedy can fill machine 1 with the flexible jobs."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return Instance.from_rows([[0, k]] * k + [[k, k]] * k)


def fixture_monobad(k: int) -> Instance:
    """``2k`` jobs, ``k + 1`` machines; the last ``k`` jobs tolerate ``k`` on the
    last machine, everything else is 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return Instance.from_rows([[1] * (k + 1)] * k + [[1] * k + [k]] * k)


THREE_PARTITION_EXAMPLE = ((26, 30, 31, 33, 36, 44), 100, 2)


def fixtures(name: str, **params) -> Instance:
    key = name.upper().replace("_", "-")
    if key == "IR":
        return fixture_ir(int(params.get("r", 3)))
    if key == "TIGHT":
        return fixture_tight(int(params.get("k", 2)))
    if key == "MONOBAD":
        return fixture_monobad(int(params.get("k", 2)))
    if key in ("3PART-EXAMPLE", "3PART"):
        return gen_3partition(*THREE_PARTITION_EXAMPLE)
    raise KeyError(f"unknown fixture {name!r}; known: IR, TIGHT, MONOBAD, 3PART-EXAMPLE")
