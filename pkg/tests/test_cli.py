"""CLI surface: exit codes, formats, deterministic exports."""

import io
import json

import pytest

from minabc import FamilyParams, abc_index, closed_form_abc, tree_from_edges, validate
from minabc.cli import (
    EXIT_INFEASIBLE,
    EXIT_OK,
    EXIT_USAGE,
    main,
    record_to_params,
)
from minabc.family import order_of, root_degree


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_solve_human(capsys):
    code, out = run(["solve", "5047"], capsys)
    assert code == EXIT_OK
    assert "root degree      : 176" in out
    assert "branch size z    : 50" in out


def test_solve_infeasible(capsys):
    assert run(["solve", "106"], capsys)[0] == EXIT_INFEASIBLE


def test_usage_errors(capsys):
    assert main(["solve"]) == EXIT_USAGE
    assert main(["export", "5047", "--format", "png", "x"]) == EXIT_USAGE
    assert main(["nope"]) == EXIT_USAGE


def test_solve_json_round_trip(capsys):
    code, out = run(["solve", "1014814", "--json"], capsys)
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["z"] == 51 and rec["n_z"] == 2594 and rec["n_zp1"] == 236 and rec["n3"] == 3
    p = record_to_params(rec)
    validate(p)
    assert order_of(p) == rec["n"] == 1014814
    assert root_degree(p) == rec["root_degree"]
    # printed value equals a fresh recomputation at 17 significant digits
    assert rec["abc"] == f"{closed_form_abc(p):.16e}"
    assert rec["validity"] == "characterized"
    # a second run emits the identical record
    assert json.loads(run(["solve", "1014814", "--json"], capsys)[1]) == rec


def test_solve_json_advisory_flag(capsys):
    rec = json.loads(run(["solve", "107", "--json"], capsys)[1])
    assert rec["validity"] == "advisory"


def test_export_edges_round_trip(tmp_path, capsys):
    path = tmp_path / "t.edges"
    code, _ = run(["export", "5047", "--format", "edges", str(path)], capsys)
    assert code == EXIT_OK
    first = path.read_bytes()
    lines = first.decode().splitlines()
    assert lines[0] == "n 5047"
    assert len(lines) == 5047  # header + 5046 edges
    edges = [tuple(map(int, ln.split())) for ln in lines[1:]]
    assert all(u < v for u, v in edges)
    assert edges == sorted(edges)
    t = tree_from_edges(5047, edges)
    rec = json.loads(run(["solve", "5047", "--json"], capsys)[1])
    assert abs(abc_index(t) - float(rec["abc"])) <= 1e-10 * float(rec["abc"])
    # byte-identical on repetition
    run(["export", "5047", "--format", "edges", str(path)], capsys)
    assert path.read_bytes() == first


def test_export_dot(tmp_path, capsys):
    path = tmp_path / "t.gv"
    code, _ = run(["export", "107", "--format", "dot", str(path)], capsys)
    assert code == EXIT_OK
    text = path.read_text()
    assert text.startswith("digraph tree {")
    assert 'label="root' in text
    assert text.count("->") == 106


def test_export_infeasible(tmp_path, capsys):
    code, _ = run(["export", "106", "--format", "edges", str(tmp_path / "x")], capsys)
    assert code == EXIT_INFEASIBLE


def test_brute_cli(capsys):
    code, out = run(["brute", "4"], capsys)
    assert code == EXIT_OK
    assert "searched 2 isomorphism classes" in out
    assert "2.1213203435596" in out
    code, out = run(["brute", "7", "--json"], capsys)
    rec = json.loads(out)
    assert rec["searched"] == 11
    assert main(["brute", "25"]) == EXIT_USAGE


def test_verify_cli(capsys):
    code, out = run(["verify", "T14"], capsys)
    assert code == EXIT_OK
    assert "PASS" in out
    code, out = run(["verify", "props", "--samples", "5000"], capsys)
    assert code == EXIT_OK
