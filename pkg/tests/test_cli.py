"""Command-line surface: exit codes, JSON round-trips, human output."""

import json

import pytest

from greenseq.cli import main

B_STAR_JSON = {"n": 3, "rows": [[0, 1, 2], [-1, 0, 1], [-1, -1, 0]]}
HEAVY2_JSON = {"n": 2, "rows": [[0, 2], [-2, 0]]}


@pytest.fixture
def b_star_file(tmp_path):
    p = tmp_path / "b.json"
    p.write_text(json.dumps(B_STAR_JSON))
    return str(p)


@pytest.fixture
def heavy2_file(tmp_path):
    p = tmp_path / "h.json"
    p.write_text(json.dumps(HEAVY2_JSON))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_mgs(capsys, b_star_file):
    code, out, _ = run(capsys, "classify", "--matrix", b_star_file, "--seq", "3,2,1")
    assert code == 0
    assert "kind=reddening r=0" in out and "maximal green" in out


def test_classify_empty_sequence_is_zero_greening(capsys, b_star_file):
    code, out, _ = run(capsys, "classify", "--matrix", b_star_file, "--seq", "")
    assert code == 0
    assert "kind=greening r=0" in out


def test_classify_json_round_trips(capsys, b_star_file):
    code, out, _ = run(capsys, "classify", "--matrix", b_star_file,
                       "--seq", "1,2,1,2,1,3,1,2", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj == {"kind": "reddening", "r": 2, "perm": [2, 1, 3]}
    assert json.loads(json.dumps(obj)) == obj


def test_mutate_command(capsys, b_star_file):
    code, out, _ = run(capsys, "mutate", "--matrix", b_star_file, "--seq", "1", "--json")
    assert code == 0
    assert json.loads(out) == {"n": 3, "rows": [[0, -1, -2], [1, 0, 1], [1, -1, 0]]}


def test_seed_trace_marks_colors(capsys, b_star_file):
    code, out, _ = run(capsys, "seed-trace", "--matrix", b_star_file,
                       "--seq", "1,2,1,2,1,3,1,2")
    assert code == 0
    assert "red -" in out and "green +" in out
    assert "(1, 1, 0)" in out


def test_search_mgs_found(capsys, b_star_file):
    code, out, _ = run(capsys, "search-mgs", "--matrix", b_star_file,
                       "--max-depth", "8", "--json")
    assert code == 0
    assert json.loads(out)["sequence"] == [3, 2, 1]


def test_search_mgs_budget_exhausted(capsys, b_star_file):
    code, out, _ = run(capsys, "search-mgs", "--matrix", b_star_file, "--max-depth", "2")
    assert code == 3
    assert "budget exhausted" in out
    assert "n = 3" in out


def test_search_mgs_env_budget(capsys, b_star_file, monkeypatch):
    monkeypatch.setenv("GREENSEQ_MAX_DEPTH", "2")
    code, out, _ = run(capsys, "search-mgs", "--matrix", b_star_file)
    assert code == 3


def test_conjugate_requires_classifiable_sequence(capsys, b_star_file):
    code, _, err = run(capsys, "conjugate", "--matrix", b_star_file,
                       "--seq", "1", "--direction", "2")
    assert code == 1
    assert "reddening or greening" in err


def test_conjugate_verify(capsys, b_star_file):
    code, out, _ = run(capsys, "conjugate", "--matrix", b_star_file,
                       "--seq", "3,2,1", "--direction", "1", "--verify", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["dirs"] == [1, 3, 2, 1, 1]
    assert obj["actual"] == obj["predicted"]


def test_rotate_command(capsys, b_star_file):
    code, out, _ = run(capsys, "rotate", "--matrix", b_star_file,
                       "--seq", "3,2,1", "--verify", "--json")
    assert code == 0
    assert json.loads(out)["dirs"] == [2, 1, 3]


def test_conj_diff_command(capsys, b_star_file):
    code, out, _ = run(capsys, "conj-diff", "--matrix", b_star_file, "--path", "3",
                       "--reddening-seq", "3,2,1",
                       "--alt-reddening-seq", "2,3,1,2,1,2", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["phi"] == 1
    assert obj["red_count_path"] == 1 and obj["red_count_shadow"] == 0


def test_restrict_command(capsys, b_star_file):
    code, out, _ = run(capsys, "restrict", "--matrix", b_star_file,
                       "--seq", "3,2,1", "--indices", "1,2", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["dirs"] == [2, 1]
    assert obj["verdict"]["kind"] == "reddening" and obj["verdict"]["r"] == 0


def test_enumerate_mgs_command(capsys, b_star_file):
    code, out, _ = run(capsys, "enumerate-mgs", "--matrix", b_star_file,
                       "--max-len", "6", "--json")
    assert code == 0
    obj = json.loads(out)
    assert [3, 2, 1] in obj["sequences"]
    assert [2, 3, 1, 2, 1, 2] in obj["sequences"]


def test_usage_errors(capsys, tmp_path, b_star_file):
    missing = str(tmp_path / "nope.json")
    code, _, err = run(capsys, "classify", "--matrix", missing, "--seq", "1")
    assert code == 2 and "cannot read matrix" in err

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "classify", "--matrix", str(bad), "--seq", "1")
    assert code == 2

    nonsss = tmp_path / "nonsss.json"
    nonsss.write_text(json.dumps({"n": 2, "rows": [[0, 1], [1, 0]]}))
    code, _, err = run(capsys, "classify", "--matrix", str(nonsss), "--seq", "1")
    assert code == 2 and "sign-skew-symmetric" in err

    code, _, err = run(capsys, "classify", "--matrix", b_star_file, "--seq", "1,x")
    assert code == 2

    code, _, err = run(capsys, "classify", "--matrix", b_star_file, "--seq", "7")
    assert code == 2


def test_seq_file_overrides_flag(capsys, tmp_path, b_star_file):
    seq_file = tmp_path / "seq.json"
    seq_file.write_text(json.dumps({"dirs": [3, 2, 1]}))
    code, out, _ = run(capsys, "classify", "--matrix", b_star_file,
                       "--seq", "1,1", "--seq-file", str(seq_file), "--json")
    assert code == 0
    assert json.loads(out)["r"] == 0


def test_exchange_graph_and_store_lifecycle(capsys, tmp_path, b_star_file):
    store_file = str(tmp_path / "store.jsonl")
    code, out, _ = run(capsys, "exchange-graph", "--matrix", b_star_file,
                       "--max-depth", "3", "--max-nodes", "100",
                       "--out", store_file, "--json")
    assert code == 0
    built = json.loads(out)
    assert built["nodes"] > 1

    code, out, _ = run(capsys, "store", "info", store_file, "--json")
    assert code == 0
    assert json.loads(out)["nodes"] == built["nodes"]

    code, out, _ = run(capsys, "store", "paths", store_file, "--json")
    assert code == 0
    paths = json.loads(out)["paths"]
    assert {"dirs": [3, 2, 1], "opposite_arrows": 0} in paths

    out_file = str(tmp_path / "resumed.jsonl")
    code, out, _ = run(capsys, "store", "resume", store_file, "--max-depth", "4",
                       "--out", out_file, "--json")
    assert code == 0
    assert json.loads(out)["nodes"] >= built["nodes"]

    # corrupt the original and confirm the checksum rejects it
    data = open(store_file).read().replace('"truncated":', '"truncated" :', 1)
    open(store_file, "w").write(data)
    code, _, err = run(capsys, "store", "info", store_file)
    assert code == 1 and "checksum" in err


def test_verify_suite_passes_and_is_deterministic(capsys, b_star_file):
    args = ("verify", "--matrix", b_star_file, "--suite", "all", "--seed", "42",
            "--paths", "40", "--matrices", "5", "--depth", "5")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.count("[PASS]") >= 7 and "[FAIL]" not in out1


def test_verify_rank2_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "rank2", "--seed", "7",
                       "--matrices", "6")
    assert code == 0
    assert "certified divergent" in out


def test_verify_injected_corruption_is_detected(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dualities", "--seed", "1",
                       "--paths", "5", "--inject-corruption")
    assert code == 1
    assert "detected" in out and "[FAIL]" in out


def test_heavy_rank2_search_with_forced_first_step(capsys, heavy2_file):
    code, out, _ = run(capsys, "search-mgs", "--matrix", heavy2_file,
                       "--max-depth", "20", "--max-nodes", "2000",
                       "--first-step", "1", "--json")
    assert code == 3
    assert json.loads(out)["status"] == "exhausted"
