import numpy as np
import pytest

from pdmatch import Matching, classify, is_monotone, oracle_enumerate_assignments
from pdmatch.generators import (TripleSystem, TupleSystem, extract_3dm_solution, fixtures,
                                gen_3dm, gen_3partition, gen_ddm, gen_monotonous, gen_random,
                                gen_typed, gen_vdep, three_partition_exists)


def test_random_edge_cases():
    assert gen_random(0, 0, 1, 0.0, seed=1).n == 0
    assert gen_random(3, 2, 4, seed=7) == gen_random(3, 2, 4, seed=7)
    b = gen_random(5, 2, 3, 0.5, seed=2).b
    assert set(np.unique(b)) <= {0, 1, 2, 3}


def test_monotonous():
    assert classify(gen_monotonous(6, 4, 5, seed=0)).monotonizable
    assert gen_monotonous(1, 1, 3, seed=9).b[0, 0] <= 3
    assert is_monotone(gen_monotonous(4, 3, 3, seed=4).b)


def test_vdep_and_typed_shapes():
    assert classify(gen_vdep(6, 3, 4, seed=1)).is_vdep
    assert classify(gen_typed(9, 3, 2, 4, seed=1)).type_count <= 2


def test_three_partition_example():
    inst = gen_3partition([26, 30, 31, 33, 36, 44], 100, 2)
    assert (inst.n, inst.m) == (300, 6)
    rows = {tuple(r) for r in inst.b.tolist()}
    assert rows == {(26, 30, 31, 33, 36, 44), (52, 60, 62, 66, 72, 88)}


def test_three_partition_preconditions():
    with pytest.raises(ValueError):
        gen_3partition([26, 30, 31, 33, 36, 45], 100, 2)
    with pytest.raises(ValueError):
        gen_3partition([25, 30, 31, 34, 36, 44], 100, 2)  # 25 is not above B/4


def test_three_partition_search():
    assert three_partition_exists([26, 30, 31, 33, 36, 44], 100)
    assert not three_partition_exists([26, 26, 26, 26, 47, 49], 100)


def test_3dm_examples():
    red = gen_3dm(TripleSystem(1, [(0, 0, 0)]))
    assert red.instance.b.tolist() == [[2], [2]]
    assert oracle_enumerate_assignments(red.instance).size == 2

    red = gen_3dm(TripleSystem(2, [(0, 0, 0), (1, 1, 1)]))
    assert (red.instance.n, red.instance.m) == (4, 2)
    assert oracle_enumerate_assignments(red.instance).size == 4

    red = gen_3dm(TripleSystem(2, [(0, 0, 0), (0, 1, 1), (1, 1, 1)]))
    assert red.instance.n == 5 and red.filler_owner == (0,)
    opt = oracle_enumerate_assignments(red.instance)
    assert opt.size == 5
    assert extract_3dm_solution(red, opt) == {(0, 0, 0), (1, 1, 1)}


def test_3dm_extract_trivial():
    red = gen_3dm(TripleSystem(2, [(0, 0, 0), (0, 1, 1), (1, 1, 1)]))
    assert extract_3dm_solution(red, Matching()) == set()
    fillers_only = Matching.from_assignment([-1, -1, -1, -1, 0])
    assert extract_3dm_solution(red, fillers_only) == set()


def test_3dm_validation():
    with pytest.raises(ValueError):
        TripleSystem(1, [(0, 0, 0), (0, 0, 0)])
    with pytest.raises(ValueError):
        gen_3dm(TripleSystem(2, [(0, 0, 0)]))  # X element 1 missing


def test_ddm_examples():
    inst = gen_ddm(TupleSystem(3, 1, [(0, 0, 0)]), 1, 3)
    assert inst.n == 3 and oracle_enumerate_assignments(inst).size == 3
    ts = TupleSystem(3, 2, [(0, 0, 0), (0, 1, 1)])  # x=1 on axis 0 is uncovered
    inst = gen_ddm(ts, 1, 3)
    assert oracle_enumerate_assignments(inst).size < inst.n
    with pytest.raises(ValueError):
        TupleSystem(3, 1, [(0, 0, 0), (0, 0, 0)])


def test_fixtures():
    assert fixtures("IR", r=3).b.tolist() == [[1], [3], [3], [3]]
    assert fixtures("TIGHT", k=2).b.tolist() == [[0, 2], [0, 2], [2, 2], [2, 2]]
    assert fixtures("MONOBAD", k=2).b.tolist() == [[1, 1, 1], [1, 1, 1], [1, 1, 2], [1, 1, 2]]
    with pytest.raises(KeyError):
        fixtures("nope")
