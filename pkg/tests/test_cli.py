from __future__ import annotations

import json

import pytest

from coxbasis.cli import (
    EXIT_CERTIFICATE,
    EXIT_FAIL,
    EXIT_NOT_A_BASIS,
    EXIT_OK,
    EXIT_UNSUPPORTED,
    main,
)


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_text(capsys):
    code, out, _ = run(["info", "B2", "--no-cache"], capsys)
    assert code == EXIT_OK
    assert "group order     8" in out
    assert "hyperplanes     4" in out
    assert "PROBLEM" not in out


def test_info_json(capsys):
    code, out, _ = run(["info", "I2(5)", "--format", "json", "--no-cache"], capsys)
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["order"] == 10
    assert data["field"] == "Q(sqrt(5))"
    assert data["problems"] == []


def test_info_unsupported_type(capsys):
    code, _, err = run(["info", "E6", "--no-cache"], capsys)
    assert code == EXIT_UNSUPPORTED
    assert "unsupported" in err


def test_order_bound_exit_code(capsys):
    code, _, _ = run(["info", "B3", "--order-bound", "10", "--no-cache"], capsys)
    assert code == EXIT_UNSUPPORTED


def test_basis_report_deterministic(tmp_path, capsys):
    p1 = tmp_path / "r1.json"
    p2 = tmp_path / "r2.json"
    base = ["basis", "--type", "A1", "--m", "1", "--k", "1", "--no-cache"]
    assert main(base + ["--out", str(p1)]) == EXIT_OK
    assert main(base + ["--out", str(p2)]) == EXIT_OK
    capsys.readouterr()
    assert p1.read_bytes() == p2.read_bytes()
    data = json.loads(p1.read_text())
    assert data["schema"] == "coxbasis/basis-report/1"
    assert data["certificate"]["verdict"] == "Free-with-basis"
    assert data["member_degrees"] == [3]


def test_basis_text_format(capsys):
    code, out, _ = run(["basis", "--type", "B2", "--m", "0", "--k", "1",
                        "--format", "text", "--no-cache"], capsys)
    assert code == EXIT_OK
    assert "Free-with-basis" in out
    assert "member degrees  [4, 4]" in out


def test_basis_mfile_per_orbit(tmp_path, capsys):
    mfile = tmp_path / "mult.json"
    mfile.write_text(json.dumps({"per_orbit": [1, 0]}), encoding="utf-8")
    out_path = tmp_path / "report.json"
    code, _, _ = run(["basis", "--type", "B2", "--mfile", str(mfile), "--k", "1",
                      "--no-cache", "--out", str(out_path)], capsys)
    assert code == EXIT_OK
    data = json.loads(out_path.read_text())
    assert data["inputs"]["multiplicity"]["per_hyperplane"] == [1, 0, 1, 0]
    assert data["inputs"]["base_source"] == "oracle"
    assert data["certificate"]["verdict"] == "Free-with-basis"


def test_basis_base_file_round_trip(tmp_path, capsys):
    first = tmp_path / "first.json"
    code, _, _ = run(["basis", "--type", "B2", "--m", "1", "--k", "0",
                      "--no-cache", "--out", str(first)], capsys)
    assert code == EXIT_OK
    direct = tmp_path / "direct.json"
    code, _, _ = run(["basis", "--type", "B2", "--m", "1", "--k", "1",
                      "--no-cache", "--out", str(direct)], capsys)
    assert code == EXIT_OK
    refed = tmp_path / "refed.json"
    code, _, _ = run(["basis", "--type", "B2", "--m", "1", "--k", "1",
                      "--base-file", str(first), "--no-cache",
                      "--out", str(refed)], capsys)
    assert code == EXIT_OK
    direct_data = json.loads(direct.read_text())
    refed_data = json.loads(refed.read_text())
    assert refed_data["inputs"]["base_source"] == "user"
    assert refed_data["members"] == direct_data["members"]
    assert refed_data["certificate"] == direct_data["certificate"]


def test_basis_rejects_bad_user_base(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    # coordinate fields are not tangent to the arrangement
    bad.write_text(json.dumps([
        {"degree": 0, "coefficients": [[[[0, 0], "1"]], []]},
        {"degree": 0, "coefficients": [[], [[[0, 0], "1"]]]},
    ]), encoding="utf-8")
    code, _, err = run(["basis", "--type", "B2", "--m", "1", "--k", "1",
                        "--base-file", str(bad), "--no-cache"], capsys)
    assert code == EXIT_NOT_A_BASIS
    assert "not a basis" in err


def test_basis_time_budget(capsys):
    code, _, err = run(["basis", "--type", "B3", "--m", "1", "--k", "1",
                        "--time-budget", "0", "--no-cache"], capsys)
    assert code == EXIT_UNSUPPORTED
    assert "budget" in err


def test_basis_cache_dir_is_written(tmp_path, capsys):
    cache = tmp_path / "cache"
    code, _, _ = run(["basis", "--type", "A2", "--m", "1", "--k", "1",
                      "--cache-dir", str(cache)], capsys)
    assert code == EXIT_OK
    assert list(cache.glob("invariants_*.json"))


def test_verify_all_suites(capsys):
    code, out, _ = run(["verify", "--type", "A2", "--samples", "5",
                        "--no-cache"], capsys)
    assert code == EXIT_OK
    for suite in ("euler", "jacobian", "shift", "hodge"):
        assert suite in out
    assert "FAIL" not in out


def test_verify_json_format(capsys):
    code, out, _ = run(["verify", "--type", "A1", "--suite", "euler",
                        "--samples", "5", "--format", "json", "--no-cache"], capsys)
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["passed"] is True
    assert data["suites"][0]["suite"] == "euler"


def test_verify_hodge_degrees_flag(capsys):
    code, out, _ = run(["verify", "--type", "A2", "--suite", "hodge",
                        "--degrees", "1,2", "--k", "1", "--no-cache"], capsys)
    assert code == EXIT_OK
    assert "hodge" in out
    assert "FAIL" not in out
