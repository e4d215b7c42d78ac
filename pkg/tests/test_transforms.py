"""Transformation expressions: identities, anchors, dispatch."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minabc import (
    MissingFieldError,
    NegativeCountError,
    TransformParams,
    UnknownFormError,
    delta_abc,
    solve_branch_counts,
)
from minabc import transforms as tr


def test_branch_counts_reference_rows():
    assert solve_branch_counts(53, 261, 52, "plus7") == (164, 104)
    assert solve_branch_counts(51, 365, 52, "minus7") == (358, 0)
    assert solve_branch_counts(50, 183, 52, "minus7") == (175, 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(15, 131), st.integers(1, 500), st.integers(20, 90))
def test_branch_count_identities(z, x, k):
    try:
        n_k, n_km1 = solve_branch_counts(z, x, k, "plus7")
    except NegativeCountError:
        pass
    else:
        assert n_k + n_km1 == x + 7
        assert k * n_k + (k - 1) * n_km1 == x * z - 1
    try:
        n_k, n_km1 = solve_branch_counts(z, x, k, "minus7")
    except NegativeCountError:
        pass
    else:
        assert n_k + n_km1 == x - 7
        assert k * n_k + (k - 1) * n_km1 == x * z + 1


def test_branch_counts_negative_raises():
    with pytest.raises(NegativeCountError):
        solve_branch_counts(53, 261, 70, "plus7")
    with pytest.raises(NegativeCountError):
        solve_branch_counts(51, 8, 52, "minus7")  # x - 7 too small


def test_worst_margin_anchor():
    v = delta_abc("T7", "surrogate_c", TransformParams(dv=1228, n3=919))
    assert v == pytest.approx(-0.00201013, abs=1e-6)


def test_t4_tail_crossover_value():
    # the dv-decreasing bound first goes negative at exactly 259226
    nk, nkm1 = solve_branch_counts(53, 261, 52, "plus7")
    assert tr.t4_surrogate_b(259226, 53, 261, 52, nk, nkm1) < 0
    assert tr.t4_surrogate_b(259225, 53, 261, 52, nk, nkm1) >= 0


def test_t5_tail_crossover_value():
    nk, nkm1 = solve_branch_counts(51, 365, 52, "minus7")
    assert tr.t5_surrogate_b(3863, 51, 365, 52, nk, nkm1) < 0
    assert tr.t5_surrogate_b(3862, 51, 365, 52, nk, nkm1) >= 0


def test_t14_negative_up_to_46_and_not_beyond():
    vals = {z: tr.t14_surrogate_a(z) for z in range(15, 48)}
    assert all(v < 0 for z, v in vals.items() if z <= 46)
    assert vals[47] > 0  # the bound is sharp


def test_t10_parent_terms_cancel_on_degree_swap():
    # with d(x) = d(y) + 1 the two centers swap degrees: every parent-side
    # term cancels and only the hub re-weighting residual remains
    for dy in (20, 35, 98):
        dx = dy + 1
        got = tr.t10_exact(5000.0, dx, dy)
        residual = (tr.w(dy, 4) - tr.w(dx, 4)) + (tr.w(dx, 3) - tr.w(dy, 3))
        assert got == pytest.approx(float(residual), abs=1e-12)


def test_delta_abc_dispatch_errors():
    with pytest.raises(UnknownFormError):
        delta_abc("T99", "exact", TransformParams())
    with pytest.raises(UnknownFormError):
        delta_abc("T4", "surrogate_z", TransformParams())
    with pytest.raises(MissingFieldError):
        delta_abc("T4", "exact", TransformParams(dv=100, z=53, x=261, k=52,
                                                 n_k=164, n_km1=104))  # no nb


def test_delta_abc_matches_direct_call():
    p = TransformParams(dv=1000, z=53, x=261, k=52, n_k=164, n_km1=104,
                        neighbor_degree_bound=4)
    assert delta_abc("T4", "exact", p) == pytest.approx(
        float(tr.t4_exact(1000, 53, 261, 52, 164, 104, 4)), abs=0
    )
    assert delta_abc("T4", "surrogate_A", p) == delta_abc("T4", "surrogate_a", p)


def test_exchange_expression_zero_at_zero_shift():
    x = np.linspace(2, 50, 25)
    y = np.linspace(2, 50, 25)
    assert np.allclose(-tr.w(x, y) + tr.w(x + 0.0, y - 0.0), 0.0, atol=0)


def test_degree_two_chain_is_flat():
    # every edge into a degree-2 vertex weighs 1/sqrt(2), so the exchange
    # value vanishes along such chains
    for x in (2, 3, 4):
        assert -tr.w(x, 2) + tr.w(x + 1, 2) == pytest.approx(0.0, abs=1e-15)
