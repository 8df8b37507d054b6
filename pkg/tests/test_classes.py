import itertools

import numpy as np
import pytest

from pdmatch import Instance, classify, is_monotone, monotone_order
from pdmatch.generators import fixture_tight, fixtures, gen_monotonous

from helpers import brute_monotonizable


def test_already_monotone():
    rep = classify(Instance.from_rows([[1, 2], [2, 3]]))
    assert rep.monotone_order == ((0, 1), (0, 1))
    assert rep.tolerance_set == (1, 2, 3)
    assert rep.type_count == 2


def test_reversed_orders():
    inst = Instance.from_rows([[3, 2], [2, 1]])
    order = monotone_order(inst.b)
    assert order == ((1, 0), (1, 0))
    assert is_monotone(inst.permuted(*order).b)


def test_udep_parameters():
    rep = classify(Instance.from_rows([[0, 2], [2, 2], [2, 2]]))
    assert rep.is_udep
    assert rep.udep_params == ((2, frozenset({1})), (2, frozenset({0, 1})),
                               (2, frozenset({0, 1})))
    assert not rep.udep_complete


def test_vdep_detection():
    rep = classify(Instance.from_rows([[1, 0, 3], [1, 2, 3]]))
    assert rep.is_vdep and not rep.is_udep
    assert rep.vdep_params[1] == (2, frozenset({1}))


def test_three_partition_example():
    rep = classify(fixtures("3PART"))
    assert rep.monotonizable
    assert len(rep.tolerance_set) == 12
    assert rep.type_count == 2


def test_tight_is_udep_and_monotone():
    rep = classify(fixture_tight(2))
    assert rep.is_udep and rep.monotonizable


def test_all_ones_uniform():
    rep = classify(Instance(np.ones((3, 4), dtype=int)))
    assert rep.uniform and rep.tolerance_set == (1,)
    assert rep.udep_complete


def test_not_monotonizable():
    # rows incomparable: (1,2) vs (2,1)
    assert monotone_order(np.array([[1, 2], [2, 1]])) is None


def test_flags_and_dict():
    rep = classify(fixture_tight(2))
    assert rep.flags().startswith("mono|udep")
    d = rep.to_dict()
    assert d["monotonizable"] and d["type_count"] == 2


@pytest.mark.parametrize("n,m", [(2, 2), (3, 2), (2, 3)])
def test_exhaustive_small_matrices(n, m):
    for vals in itertools.product(range(3), repeat=n * m):
        b = np.array(vals).reshape(n, m)
        got = monotone_order(b)
        assert (got is not None) == brute_monotonizable(b), b
        if got is not None:
            assert is_monotone(b[list(got[0])][:, list(got[1])])


def test_generated_monotone_instances_detected():
    for s in range(50):
        inst = gen_monotonous(5, 4, 5, seed=s)
        assert classify(inst).monotonizable
