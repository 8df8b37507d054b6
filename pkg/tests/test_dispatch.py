import pytest

from pdmatch import ALGORITHM_NAMES, dispatch, solve, verify
from pdmatch.generators import fixture_ir, fixtures, gen_random


def test_names():
    assert ALGORITHM_NAMES == ("greedy", "greedy-global", "vdep", "udep-complete", "udep-mono",
                               "mono-greedy", "const-m", "uniform", "zero-k", "one-two",
                               "mono-3tol", "t-types", "two-types", "oracle", "auto")


def test_ir3_routes_to_exact_path():
    rep = dispatch(fixture_ir(3))
    # a single machine with one tolerance per job is complete U-dependent,
    # which precedes const-m in the priority list
    assert rep.algorithm == "udep-complete"
    assert rep.optimal and rep.size == 3


def test_three_partition_routes_to_const_m():
    rep = dispatch(fixtures("3PART"))
    assert rep.algorithm == "const-m" and rep.size == 300 and rep.optimal


def test_large_random_falls_back_to_greedy():
    inst = gen_random(50, 20, 9, 0.0, seed=0)
    rep = dispatch(inst)
    assert rep.algorithm == "greedy" and not rep.optimal
    assert verify(inst, rep.matching).valid


def test_unknown_algorithm():
    with pytest.raises(ValueError):
        solve(fixture_ir(2), "simplex")


def test_solve_forwards_options():
    rep = solve(fixtures("TIGHT", k=2), "greedy", machine_order=(1, 0), tiebreak="high")
    assert rep.size == 2 and not rep.optimal
