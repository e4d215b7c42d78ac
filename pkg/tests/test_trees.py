"""Edge weight, ABC index, and the degree-preserving switch."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minabc import (
    DomainError,
    SwitchRejected,
    abc_index,
    apply_switch,
    edge_weight,
    path_tree,
    star_tree,
    tree_from_edges,
)
from minabc.trees import relabel

INV_SQRT2 = 1.0 / math.sqrt(2.0)


def random_tree(n, rng):
    """Uniform random labelled tree via a random attachment sequence."""
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return tree_from_edges(n, edges)


def test_edge_weight_values():
    assert edge_weight(2, 2) == pytest.approx(INV_SQRT2, abs=1e-15)
    assert edge_weight(1, 2) == pytest.approx(INV_SQRT2, abs=1e-15)
    assert edge_weight(53, 4) == pytest.approx(math.sqrt(55 / 212), abs=1e-15)
    assert edge_weight(3, 7) == edge_weight(7, 3)


def test_edge_weight_domain():
    with pytest.raises(DomainError):
        edge_weight(0.5, 2)
    with pytest.raises(DomainError):
        edge_weight(2, 0)
    assert edge_weight(1, 1) == 0.0


def test_abc_small_fixtures():
    assert abc_index(path_tree(4)) == pytest.approx(3 * INV_SQRT2, abs=1e-14)
    assert abc_index(star_tree(5)) == pytest.approx(2 * math.sqrt(3), abs=1e-14)
    # spider with legs (2, 1, 1): 2 f(3,1) + f(3,2) + f(2,1)
    spider = tree_from_edges(5, [(0, 1), (1, 2), (0, 3), (0, 4)])
    assert abc_index(spider) == pytest.approx(3.047206724228547, abs=1e-13)


@given(st.integers(min_value=3, max_value=40))
def test_path_and_star_closed_forms(n):
    # n = 2 is the lone exception: the only edge joins two pendants, weight 0
    assert abc_index(path_tree(n)) == pytest.approx((n - 1) * INV_SQRT2, rel=1e-14)
    assert abc_index(star_tree(n)) == pytest.approx(
        math.sqrt((n - 1) * (n - 2)), rel=1e-14
    )


def test_single_edge_weighs_zero():
    assert abc_index(path_tree(2)) == 0.0


def test_relabel_invariance():
    rng = random.Random(42)
    for _ in range(50):
        n = rng.randrange(4, 32)
        t = random_tree(n, rng)
        ref = abc_index(t)
        perm = list(range(n))
        rng.shuffle(perm)
        assert abc_index(relabel(t, perm)) == ref  # fsum: exact, order-free


def test_switch_on_path_equality():
    # both endpoints pendant: degrees match, tree is re-wired into a path again
    t = path_tree(6)
    t2 = apply_switch(t, (1, 0), (4, 5))
    assert abc_index(t2) == pytest.approx(abc_index(t), abs=1e-13)
    assert t2.degrees() == t.degrees()  # the switch never touches degrees


def test_switch_rejections():
    t = path_tree(6)
    with pytest.raises(SwitchRejected):
        apply_switch(t, (0, 1), (0, 1))  # same edge
    with pytest.raises(SwitchRejected):
        apply_switch(t, (0, 1), (1, 2))  # shared vertex
    with pytest.raises(SwitchRejected):
        apply_switch(t, (0, 1), (2, 4))  # rs not an edge
    with pytest.raises(SwitchRejected):
        apply_switch(t, (0, 1), (3, 4))  # cycle 1-2-3 plus a separate component


def _switch_samples(count, seed):
    """Random valid switches meeting d(p) >= d(r), d(q) <= d(s)."""
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        n = rng.randrange(6, 31)
        t = random_tree(n, rng)
        deg = t.degrees()
        edges = t.edges()
        for _ in range(60):
            (a, b), (c, d) = rng.sample(edges, 2)
            for p, q in ((a, b), (b, a)):
                for r, s in ((c, d), (d, c)):
                    if deg[p] >= deg[r] and deg[q] <= deg[s]:
                        try:
                            t2 = apply_switch(t, (p, q), (r, s))
                        except SwitchRejected:
                            continue
                        yield t, t2, deg[p] == deg[r] or deg[q] == deg[s]
                        produced += 1
                        if produced >= count:
                            return
                        break
                else:
                    continue
                break


@pytest.mark.parametrize("count,seed", [(300, 1337)])
def test_switch_never_increases(count, seed):
    for t, t2, boundary in _switch_samples(count, seed):
        before, after = abc_index(t), abc_index(t2)
        assert after <= before + 1e-12
        if boundary:
            assert after == pytest.approx(before, abs=1e-12)
        else:
            assert after < before - 1e-12
