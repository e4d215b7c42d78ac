"""Feasible-set enumeration and exact minimization."""

import random

import pytest

from minabc import (
    FamilyParams,
    InfeasibleOrderError,
    closed_form_abc,
    enumerate_feasible,
    order_of,
    root_degree,
    solve,
    solve_range,
)
from minabc.family import MAX_ROOT_HUBS, Z_MAX, Z_MIN, is_valid
from minabc.solver import _specials_for


def brute_feasible(n):
    """Order-n members by scanning counters instead of residue classes."""
    out = set()
    for z in range(Z_MIN, Z_MAX + 1):
        a, b = 7 * z + 1, 7 * z + 8
        for sp in _specials_for(z):
            r_base = n - 1 - sp.order_add
            if r_base < a:
                continue
            for n3 in range(0, min(MAX_ROOT_HUBS - sp.n4, (r_base - a) // 7) + 1):
                R = r_base - 7 * n3
                for n_zp1 in range(0, R // b + 1):
                    rem = R - b * n_zp1
                    if rem % a == 0:
                        out.add(FamilyParams(
                            z=z, n_z=rem // a, n_zp1=n_zp1, n3=n3, n4=sp.n4,
                            b_star=1 if sp.kind == "star" else 0,
                            b1=1 if sp.kind == "b1" else 0,
                            b2=1 if sp.kind == "b2" else 0,
                            k1=sp.k1, k2=sp.k2,
                        ))
    return out


def test_feasible_107_and_106():
    feas = list(enumerate_feasible(107))
    assert feas == [FamilyParams(z=15, n_z=1)]
    assert list(enumerate_feasible(106)) == []


def test_feasible_contains_reference_set():
    assert FamilyParams(z=50, n_z=7, n_zp1=4, n3=164, n4=1) in set(enumerate_feasible(5047))


def test_feasible_orders_and_validity():
    for n in (107, 300, 5047):
        seen = set()
        for p in enumerate_feasible(n):
            assert order_of(p) == n
            assert is_valid(p)
            assert p not in seen
            seen.add(p)


@pytest.mark.parametrize("seed,count", [(11, 12)])
def test_diophantine_completeness(seed, count):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randrange(107, 3000)
        assert set(enumerate_feasible(n)) == brute_feasible(n)


def test_line_solutions_match_counter_scan():
    # the residue-class walk along one order-equation line returns exactly
    # the pairs a counter scan finds, across 1000 random instances
    rng = random.Random(23)
    for _ in range(1000):
        z = rng.randrange(Z_MIN, Z_MAX + 1)
        a, b = 7 * z + 1, 7 * z + 8
        R = rng.randrange(0, 30000)
        binv = pow(b, -1, a)
        q = (R % a) * binv % a
        fast = []
        while b * q <= R:
            fast.append(((R - b * q) // a, q))
            q += a
        slow = [
            ((R - b * n_zp1) // a, n_zp1)
            for n_zp1 in range(R // b + 1)
            if (R - b * n_zp1) % a == 0
        ]
        assert fast == slow


def test_solve_reference_small_orders():
    assert solve(5047).best == FamilyParams(z=50, n_z=7, n_zp1=4, n3=164, n4=1)
    assert solve(6956).best == FamilyParams(z=49, n_z=1, n_zp1=15, n3=191, n4=1)
    r = solve(16443)
    assert r.best == FamilyParams(z=49, n_z=0, n_zp1=41, n3=293)
    # the same tree written with z = 50 ties exactly
    assert FamilyParams(z=50, n_z=41, n_zp1=0, n3=293) in r.ties


def test_solve_infeasible():
    with pytest.raises(InfeasibleOrderError):
        solve(106)
    with pytest.raises(InfeasibleOrderError):
        solve(108)  # 107 + 1 is not reachable either


def test_solve_below_characterized_threshold_is_advisory():
    r = solve(107)
    assert not r.characterized
    assert solve(5047).characterized


def test_solve_matches_explicit_minimum():
    for n in (500, 1234, 2222):
        candidates = list(enumerate_feasible(n))
        if not candidates:
            continue
        best = min(candidates, key=closed_form_abc)
        got = solve(n, prune=False)
        assert abs(closed_form_abc(got.best) - closed_form_abc(best)) <= 1e-12


def test_pruned_equals_unpruned_samples():
    rng = random.Random(3)
    ns = [1000, 19040] + [rng.randrange(1000, 50000) for _ in range(6)]
    for n in ns:
        try:
            a = solve(n, prune=True)
        except InfeasibleOrderError:
            continue
        b = solve(n, prune=False)
        assert a.best == b.best, n
        assert a.ties == b.ties, n


def test_determinism():
    a = solve(5047)
    b = solve(5047)
    assert a.best == b.best
    assert a.abc_value == b.abc_value  # bit-identical
    assert a.abc_value_hp == b.abc_value_hp


def test_value_strictly_increases_with_order():
    values = []
    for n in range(2000, 2031):
        try:
            values.append(solve(n).abc_value)
        except InfeasibleOrderError:
            continue
    assert all(b > a for a, b in zip(values, values[1:]))


def test_solve_range():
    out = solve_range(6956, 6956)
    assert len(out) == 1 and out[0].result.best == solve(6956).best
    window = solve_range(105, 110)
    by_n = {o.n: o for o in window}
    assert by_n[106].error is not None and by_n[106].result is None
    assert by_n[107].result.best == FamilyParams(z=15, n_z=1)
    # threaded run returns identical output
    threaded = solve_range(105, 110, threads=2)
    assert [(o.n, o.result.best if o.result else None, o.error is None)
            for o in window] == [
        (o.n, o.result.best if o.result else None, o.error is None) for o in threaded
    ]


def test_root_degree_of_best_matches():
    r = solve(5047)
    assert root_degree(r.best) == 176
