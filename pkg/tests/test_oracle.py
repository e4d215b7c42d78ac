"""Brute-force ground truth: tree enumeration and exhaustive minima."""

import math
import random

import pytest

from minabc import (
    abc_index,
    brute_min_abc,
    enumerate_trees,
    family_exhaustive,
    free_tree_count,
    solve,
)
from minabc.oracle import KNOWN_FREE_TREE_COUNTS, OrderCapExceeded
from minabc.trees import relabel


def test_counts_up_to_twelve():
    for n in range(1, 13):
        assert free_tree_count(n) == KNOWN_FREE_TREE_COUNTS[n - 1]


def test_enumeration_yields_distinct_valid_trees():
    seen = set()
    for t in enumerate_trees(9):
        assert t.vertex_count == 9
        key = tuple(sorted(t.edges()))
        assert key not in seen
        seen.add(key)
    assert len(seen) == 47


def test_cap():
    with pytest.raises(OrderCapExceeded):
        list(enumerate_trees(21))
    with pytest.raises(OrderCapExceeded):
        brute_min_abc(25)
    with pytest.raises(OrderCapExceeded):
        brute_min_abc(3)


def test_brute_fixtures():
    r4 = brute_min_abc(4)
    assert r4.abc_value == pytest.approx(3 / math.sqrt(2), abs=1e-8)
    assert sorted(r4.tree.degrees(), reverse=True) == [2, 2, 1, 1]  # the path
    r5 = brute_min_abc(5)
    assert r5.abc_value == pytest.approx(4 / math.sqrt(2), abs=1e-8)
    assert sorted(r5.tree.degrees(), reverse=True) == [2, 2, 2, 1, 1]
    r7 = brute_min_abc(7)
    assert r7.searched == 11
    # the path ties with the three-leg spider: both are all-degree-2 contacts
    assert len(r7.trees) == 2
    assert r7.abc_value == pytest.approx(6 / math.sqrt(2), abs=1e-12)


def test_brute_regression_value_order_ten():
    r = brute_min_abc(10)
    assert r.searched == 106
    assert r.abc_value == pytest.approx(6.3235209161590475, abs=1e-12)


def test_enumerated_abc_is_relabel_invariant():
    rng = random.Random(5)
    for t in list(enumerate_trees(8))[:8]:
        perm = list(range(8))
        rng.shuffle(perm)
        assert abc_index(relabel(t, perm)) == abc_index(t)


def test_family_exhaustive_matches_solver():
    for n in (107, 5047):
        assert family_exhaustive(n).best == solve(n).best
