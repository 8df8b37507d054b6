"""Algorithm registry and automatic selection."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import exact, greedy, oracle
from .classes import classify
from .errors import BudgetExceededError, ClassMismatchError
from .instance import Instance, Matching


@dataclass(frozen=True)
class SolveReport:
    matching: Matching
    algorithm: str
    optimal: bool
    elapsed: float  # seconds

    @property
    def size(self) -> int:
        return self.matching.size


# name -> (certified optimal?, solver(inst, options) -> Matching)
ALGORITHMS: dict[str, tuple[bool, Callable[..., Matching]]] = {
    "greedy": (False, lambda inst, o: greedy.greedy_strongly_maximal(
        inst, greedy.GreedyConfig(o.get("machine_order"), o.get("tiebreak", greedy.LOW)))),
    "greedy-global": (False, lambda inst, o: greedy.greedy_global(
        inst, o.get("tiebreak", greedy.LOW))),
    "vdep": (True, lambda inst, o: exact.solve_vdep(inst)),
    "udep-complete": (True, lambda inst, o: exact.solve_udep_complete(inst)),
    "udep-mono": (True, lambda inst, o: exact.solve_udep_mono(inst)),
    "mono-greedy": (False, lambda inst, o: exact.solve_mono_general_greedy(inst)),
    "const-m": (True, lambda inst, o: exact.solve_const_m(
        inst, o.get("budget") or exact.DEFAULT_CONST_M_BUDGET)),
    "uniform": (True, lambda inst, o: exact.solve_uniform_tolerance(inst)),
    "zero-k": (True, lambda inst, o: exact.solve_zero_k(inst)),
    "one-two": (True, lambda inst, o: exact.solve_one_two(inst)),
    "mono-3tol": (True, lambda inst, o: exact.solve_mono_three_tol(
        inst, o.get("budget") or exact.DEFAULT_MONO3_BUDGET)),
    "t-types": (True, lambda inst, o: exact.solve_t_types(
        inst, o.get("max_t", 3), o.get("budget") or exact.DEFAULT_TYPES_BUDGET)),
    "two-types": (True, lambda inst, o: exact.solve_two_types(
        inst, o.get("budget") or exact.DEFAULT_TYPES_BUDGET)),
    "oracle": (True, lambda inst, o: oracle.oracle_enumerate_assignments(
        inst, o.get("budget") or oracle.DEFAULT_ASSIGNMENT_BUDGET)),
}

ALGORITHM_NAMES = tuple(ALGORITHMS) + ("auto",)


def solve(inst: Instance, algorithm: str = "auto", **options) -> SolveReport:
    """Run one named algorithm (or ``"auto"``) and time it.

    Class and budget errors from the chosen solver propagate unchanged.
    """
    if algorithm == "auto":
        return dispatch(inst, **options)
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}; choose from {', '.join(ALGORITHM_NAMES)}")
    optimal, fn = ALGORITHMS[algorithm]
    t0 = time.perf_counter()
    match = fn(inst, options)
    return SolveReport(match, algorithm, optimal, time.perf_counter() - t0)


def dispatch(inst: Instance, **options) -> SolveReport:
    """Pick the first applicable exact algorithm, falling back to greedy.

    Order: uniform, zero-k, one-two, vdep, udep-complete, udep-mono, t-types
    (at most 3 types), mono-3tol, const-m, oracle, greedy.  The enumeration
    based solvers are skipped when their budget would be exceeded.
    """
    t0 = time.perf_counter()
    report = classify(inst)
    tset = report.tolerance_set
    positive = [k for k in tset if k > 0]

    plan = []
    if len(tset) == 1 and tset[0] >= 1:
        plan.append("uniform")
    if len(positive) <= 1:
        plan.append("zero-k")
    if tset and set(tset) <= {1, 2}:
        plan.append("one-two")
    if report.is_vdep:
        plan.append("vdep")
    if report.udep_complete:
        plan.append("udep-complete")
    if report.is_udep and report.monotonizable:
        plan.append("udep-mono")
    if report.type_count <= 3:
        plan.append("t-types")
    if report.monotonizable and len(tset) <= 3:
        plan.append("mono-3tol")
    plan += ["const-m", "oracle"]

    for name in plan:
        optimal, fn = ALGORITHMS[name]
        try:
            match = fn(inst, options)
        except (BudgetExceededError, ClassMismatchError):
            continue
        return SolveReport(match, name, optimal, time.perf_counter() - t0)
    match = greedy.greedy_strongly_maximal(inst)
    return SolveReport(match, "greedy", False, time.perf_counter() - t0)
