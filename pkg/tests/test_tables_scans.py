"""Built-in bound tables and the negativity scanners."""

import dataclasses

import pytest

from minabc import builtin_tables, scan_negativity, solve_branch_counts
from minabc.scans import (
    check_monotonicity,
    check_surrogate_dominance,
    check_surrogate_monotonicity,
    scan_t4,
)
from minabc.tables import (
    MAX_ROOT_HUBS_PLAIN,
    MAX_ROOT_HUBS_SPECIAL,
    BoundRow,
    BoundTable,
    large_z_table,
    max_branch_count,
    small_z_table,
)


def test_large_z_shape_and_spot_values():
    t = large_z_table()
    assert len(t.rows) == 79
    assert [r.z for r in t.rows] == list(range(53, 132))
    by_z = {r.z: r for r in t.rows}
    assert (by_z[53].x, by_z[53].k, by_z[53].n_k, by_z[53].n_km1) == (261, 52, 164, 104)
    assert (by_z[131].x, by_z[131].k, by_z[131].n_k, by_z[131].n_km1) == (13, 86, 2, 18)
    assert (by_z[66].x, by_z[66].n_k, by_z[66].n_km1) == (25, 17, 15)


def test_small_z_shape_and_thresholds():
    t = small_z_table()
    assert len(t.rows) == 37
    by_z = {r.z: r for r in t.rows}
    assert by_z[51].dv_threshold == 3249 and by_z[51].x == 365
    assert by_z[50].dv_threshold == 1358 and by_z[50].x == 183
    assert by_z[37].dv_threshold == 47
    assert by_z[36].dv_threshold is None and by_z[36].x == 23
    assert by_z[15].x == 14 and by_z[15].k == 31


def test_all_rows_satisfy_their_identities():
    for r in large_z_table().rows:
        assert solve_branch_counts(r.z, r.x, r.k, "plus7") == (r.n_k, r.n_km1)
    for r in small_z_table().rows:
        assert solve_branch_counts(r.z, r.x, r.k, "minus7") == (r.n_k, r.n_km1)


def test_root_hub_caps_spot_values():
    assert MAX_ROOT_HUBS_PLAIN[53] == 919
    assert MAX_ROOT_HUBS_PLAIN[54] == 882
    assert MAX_ROOT_HUBS_PLAIN[15] == 426
    assert MAX_ROOT_HUBS_SPECIAL[53] == 919
    assert MAX_ROOT_HUBS_SPECIAL[48] == 724  # one higher than the plain case
    assert MAX_ROOT_HUBS_PLAIN[48] == 723
    assert len(MAX_ROOT_HUBS_PLAIN) == len(MAX_ROOT_HUBS_SPECIAL) == 117


def test_max_branch_count():
    assert max_branch_count(53) == 260
    assert max_branch_count(54) == 130
    assert max_branch_count(51) == 364
    assert max_branch_count(52) is None
    assert max_branch_count(15) == 13


def test_builtin_tables_keys():
    tables = builtin_tables()
    assert set(tables) == {"T4", "T5", "T6", "T6_special"}
    assert tables["T4"].rows[0].z == 53


def test_scan_rejects_corrupted_row():
    base = large_z_table()
    bad_row = dataclasses.replace(base.rows[0], n_k=base.rows[0].n_k + 1)
    bad = BoundTable("T4", "corrupted", (bad_row,) + base.rows[1:3])
    report = scan_t4(bad)
    assert not report.passed
    assert any("identities" in str(v) for r in report.rows for v in r.violations)


@pytest.mark.parametrize("tid", ["T2", "T7", "T9", "T11", "T12", "T13", "T14", "T15"])
def test_fast_scans_pass(tid):
    report = scan_negativity(tid)
    assert report.passed, report.to_text()
    assert report.max_value < 0


def test_t5_scan_passes():
    report = scan_negativity("T5")
    assert report.passed
    by_label = {r.label: r for r in report.rows}
    assert by_label["z=51 x=365"].crossover == 3863


def test_monotonicity_props_quick():
    assert check_monotonicity(samples=20_000, seed=7).passed
    assert check_surrogate_dominance(samples=2_000, seed=8).passed
    assert check_surrogate_monotonicity(samples=2_000, seed=9).passed
