import itertools

import numpy as np
import pytest

from pdmatch import (GreedyConfig, Instance, greedy_global, greedy_strongly_maximal,
                     is_strongly_maximal, verify)
from pdmatch.generators import fixture_ir, fixture_tight, gen_random
from pdmatch.greedy import best_load

from helpers import brute_opt


@pytest.mark.parametrize("cfg", [GreedyConfig(), GreedyConfig(job_tiebreak="high")])
def test_ir3_any_config(cfg):
    match = greedy_strongly_maximal(fixture_ir(3), cfg)
    assert match.sorted_edges() == [(1, 0), (2, 0), (3, 0)]


def test_tight_adversarial():
    match = greedy_strongly_maximal(fixture_tight(2), GreedyConfig((1, 0), "high"))
    assert match.sorted_edges() == [(2, 1), (3, 1)]


def test_tight_friendly_order_is_optimal():
    assert greedy_strongly_maximal(fixture_tight(2), GreedyConfig((0, 1))).size == 4


def test_empty():
    assert greedy_strongly_maximal(Instance.from_rows([], m=0)).size == 0
    assert greedy_global(Instance.from_rows([], m=2)).size == 0


def test_best_load():
    assert best_load(np.array([3, 3, 3, 1])) == 3
    assert best_load(np.array([3, 1, 1])) == 1
    assert best_load(np.array([])) == 0


def test_bad_config():
    with pytest.raises(ValueError):
        greedy_strongly_maximal(fixture_tight(2), GreedyConfig((0, 0)))
    with pytest.raises(ValueError):
        GreedyConfig(job_tiebreak="middle")


def test_global_examples():
    assert greedy_global(fixture_ir(3)).size == 3
    assert greedy_global(Instance(np.zeros((3, 2), dtype=int))).size == 0
    assert greedy_global(fixture_tight(2), "high").size == 2


def test_half_approximation_and_strong_maximality():
    for s in range(120):
        inst = gen_random(6, 3, 4, 0.3, seed=s)
        opt = brute_opt(inst)
        for order in itertools.permutations(range(3)):
            for tb in ("low", "high"):
                match = greedy_strongly_maximal(inst, GreedyConfig(order, tb))
                assert verify(inst, match).valid
                assert is_strongly_maximal(inst, match)
                assert 2 * match.size >= opt
        g = greedy_global(inst)
        assert verify(inst, g).valid and 2 * g.size >= opt
