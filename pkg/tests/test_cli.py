import json

import pytest

from truncbin.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run_cli(capsys, *argv, "--format", "json")
    return code, json.loads(out)


# --- exit code contract -----------------------------------------------------

def test_exit_codes_for_valid_and_invalid_invocations(capsys, tmp_path):
    matrix = [
        (["prove", "5"], 0),
        (["prove", "13"], 0),
        (["prove", "59"], 1),  # inconclusive
        (["prove", "9"], 2),
        (["prove", "4"], 2),
        (["factor", "11"], 0),
        (["factor", "8"], 2),
        (["residues", "7"], 0),
        (["residues", "10"], 2),
        (["identities", "3..5", "--trials", "0"], 2),
        (["identities", "nonsense"], 2),
        (["identities", "9..3"], 2),
        (["scan", "--max", "2", "--atlas", str(tmp_path / "a.json")], 2),
        (["scan", "--max", "7", "--atlas", str(tmp_path)], 3),  # path is a directory
        (["prove", "103"], 2),  # beyond default bound
        (["no-such-command"], 2),
    ]
    for argv, expected in matrix:
        code = main(argv)
        capsys.readouterr()
        assert code == expected, argv


def test_usage_error_names_the_precondition(capsys):
    code, _, err = run_cli(capsys, "prove", "9")
    assert code == 2
    assert "odd prime" in err and "9" in err


# --- identities -------------------------------------------------------------

def test_identities_text_reports_seed_and_counts(capsys):
    code, out, _ = run_cli(capsys, "identities", "3..9", "--trials", "100", "--seed", "42")
    assert code == 0
    assert "seed=42" in out
    for n in range(3, 10):
        assert f"n={n}: trials=100 failures=0" in out
    assert "all identities hold" in out


def test_identities_json_schema(capsys):
    code, doc = run_json(capsys, "identities", "3..5", "--trials", "25", "--seed", "1")
    assert code == 0
    assert doc["schema_version"] == 1
    assert doc["command"] == "identities"
    assert doc["params"] == {"range": [3, 5], "trials": 25, "seed": 1}
    assert doc["results"] == [
        {"n": 3, "trials": 25, "failures": []},
        {"n": 4, "trials": 25, "failures": []},
        {"n": 5, "trials": 25, "failures": []},
    ]


# --- prove ------------------------------------------------------------------

def test_prove_text_output(capsys):
    code, out, _ = run_cli(capsys, "prove", "5")
    assert code == 0
    assert "outcome: proven_k1" in out
    assert "pair_count: 8" in out


def test_prove_json_matches_text_facts(capsys):
    code, out, _ = run_cli(capsys, "prove", "13")
    assert code == 0
    code_json, doc = run_json(capsys, "prove", "13")
    assert code_json == 0
    (result,) = doc["results"]
    assert f"outcome: {result['outcome']}" in out
    assert f"pair_count: {result['pair_count']}" in out
    assert result["outcome"] == "proven_dichotomy"
    assert result["caveats"] == ["BETA_NONUNIT_VALUATION"]
    assert "BETA_NONUNIT_VALUATION" in out
    assert len(result["trinomial_zeros"]) == 12
    assert result["cofactor_zeros"] == []
    assert isinstance(result["elapsed"], float)


# --- factor -----------------------------------------------------------------

def test_factor_goldens(capsys):
    code, doc = run_json(capsys, "factor", "11")
    assert code == 0
    (result,) = doc["results"]
    assert result["trinomial_exponent"] == 1
    assert result["cofactor_coefficients"] == [1, 3, 7, 9, 7, 3, 1]
    assert result["expansion_ok"] is True

    code, out, _ = run_cli(capsys, "factor", "13")
    assert code == 0
    assert "trinomial_exponent: 2" in out
    assert "cofactor_coefficients: 1 3 8 11 8 3 1" in out
    assert "expansion_check: ok" in out

    code, doc = run_json(capsys, "factor", "7")
    (result,) = doc["results"]
    assert result["trinomial_exponent"] == 2
    assert result["cofactor_coefficients"] == [1]


# --- scan -------------------------------------------------------------------

def _strip_timestamps(text):
    return [
        line
        for line in text.splitlines()
        if '"created"' not in line and '"updated"' not in line
    ]


def test_scan_writes_deterministic_atlas(capsys, tmp_path):
    first = tmp_path / "one.json"
    second = tmp_path / "two.json"
    assert main(["scan", "--max", "17", "--atlas", str(first)]) == 0
    capsys.readouterr()
    assert main(["scan", "--max", "17", "--atlas", str(second)]) == 0
    capsys.readouterr()
    assert _strip_timestamps(first.read_text()) == _strip_timestamps(second.read_text())


def test_scan_rerun_leaves_entries_unchanged(capsys, tmp_path):
    path = tmp_path / "atlas.json"
    assert main(["scan", "--max", "17", "--atlas", str(path)]) == 0
    capsys.readouterr()
    before = json.loads(path.read_text())
    assert main(["scan", "--max", "17", "--atlas", str(path)]) == 0
    capsys.readouterr()
    after = json.loads(path.read_text())
    assert before["entries"] == after["entries"]
    assert before["created"] == after["created"]


def test_scan_table_matches_json_facts(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "scan", "--max", "17", "--atlas", str(tmp_path / "t.json"))
    assert code == 0
    code, doc = run_json(capsys, "scan", "--max", "17", "--atlas", str(tmp_path / "j.json"))
    assert code == 0
    table = {
        int(parts[0]): (parts[1], int(parts[2]), int(parts[3]), int(parts[4]))
        for parts in (line.split() for line in out.splitlines()[1:-1])
    }
    for result in doc["results"]:
        row = table[result["n"]]
        assert row[0] == result["outcome"]
        assert row[1] == result["pair_count"]
        assert row[2] == len(result["trinomial_zeros"])
        assert row[3] == len(result["cofactor_zeros"])
    assert [r["n"] for r in doc["results"]] == [3, 5, 7, 11, 13, 17]


def test_scan_atlas_round_trips_through_loader(capsys, tmp_path):
    from truncbin.atlas import ScanAtlas

    path = tmp_path / "atlas.json"
    code, doc = run_json(capsys, "scan", "--max", "13", "--atlas", str(path))
    assert code == 0
    atlas = ScanAtlas.load(path)
    assert [atlas.entries[r["n"]] for r in doc["results"]] == doc["results"]


# --- residues ---------------------------------------------------------------

def test_residues_output(capsys):
    code, doc = run_json(capsys, "residues", "7")
    assert code == 0
    (result,) = doc["results"]
    assert result["modulus"] == 7
    assert result["count"] == 18
    assert result["trinomial_zeros"] == [[2, 1], [4, 1], [4, 2], [5, 3], [6, 3], [6, 5]]
    assert result["cofactor_zeros"] == []
    assert len(result["pairs"]) == 18

    code, out, _ = run_cli(capsys, "residues", "3")
    assert code == 0
    assert "pair_count: 2" in out
    assert "pairs: (1,1) (2,2)" in out
