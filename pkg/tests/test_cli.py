"""CLI behavior: renderings, exit codes, determinism, file output."""

import json
import os
import subprocess
import sys

import pytest

import overgap.cli as cli
from overgap.cli import main

TABLE_T3 = """\
n  m=0  m=1  m=2
1    1    1    0
2    2    2    0
3    3    4    1
4    5    7    2
5    7   11    4
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- table -----------------------------------------------------------------


def test_table_text(capsys):
    code, out, err = run(capsys, "table", "--t", "3", "--max-n", "5")
    assert code == 0 and err == ""
    assert out == TABLE_T3


def test_table_check_passes(capsys):
    code, _, err = run(capsys, "table", "--t", "2", "--max-n", "8", "--check")
    assert code == 0 and err == ""


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--t", "3", "--max-n", "3", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,m=0,m=1,m=2"
    assert lines[1] == "1,1,1,0"
    assert lines[3] == "3,3,4,1"


def test_table_json_round_trips(capsys):
    code, out, _ = run(capsys, "table", "--t", "3", "--max-n", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["t"] == 3 and payload["max_n"] == 4 and payload["z"] == "tracked"
    assert payload["columns"] == [0, 1, 2]
    row3 = payload["rows"][2]
    assert row3 == {"n": 3, "counts": ["3", "4", "1"]}


def test_table_summed_marks(capsys):
    code, out, _ = run(capsys, "table", "--t", "3", "--max-n", "3", "--z", "one")
    assert code == 0
    assert out.splitlines()[-1].split() == ["3", "8"]


def test_table_no_marks(capsys):
    code, out, _ = run(
        capsys, "table", "--t", "3", "--max-n", "5", "--z", "zero", "--format", "csv"
    )
    assert code == 0
    # partitions with gap at most 3: weights 1..5
    assert out.splitlines()[1:] == ["1,1", "2,2", "3,3", "4,5", "5,7"]


def test_table_usage_errors(capsys):
    assert run(capsys, "table", "--max-n", "4")[0] == 1
    assert run(capsys, "table", "--t", "0", "--max-n", "4")[0] == 1
    assert run(capsys, "table", "--t", "2", "--max-n", "4", "--z", "half")[0] == 1


# -- fold / merge ------------------------------------------------------------


def test_fold_text(capsys):
    code, out, err = run(capsys, "fold", "--t", "3", "7,4~")
    assert code == 0 and err == ""
    assert out == (
        "image: 3,3,3,1~,1\nweight: 11\nparts: 5\nmarked: 1\n"
        "quotient: 1\nraised: 1\n"
    )


def test_fold_json(capsys):
    code, out, _ = run(capsys, "fold", "--t", "3", "4~,4,3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "image": "3,3,3,1~,1",
        "weight": 11,
        "parts": 5,
        "marked": 1,
        "quotient": 1,
        "raised": 0,
    }


def test_fold_domain_error(capsys):
    code, out, err = run(capsys, "fold", "--t", "3", "7~,4")
    assert code == 1 and out == ""
    assert "error:" in err and "largest" in err


def test_fold_parse_error(capsys):
    code, _, err = run(capsys, "fold", "--t", "3", "1,2,3")
    assert code == 1 and "error:" in err


def test_merge_text(capsys):
    code, out, _ = run(capsys, "merge", "--t", "3", "[3^1 | 3,3,1~,1]")
    assert code == 0
    assert out.startswith("image: 3,3,3,1~,1\n")
    assert "merged_t_count: 1" in out


def test_merge_bound_mismatch(capsys):
    code, _, err = run(capsys, "merge", "--t", "2", "[3^1 | 3]")
    assert code == 1 and "t=3" in err


# -- preimages ---------------------------------------------------------------


def test_preimages_text(capsys):
    code, out, _ = run(capsys, "preimages", "--t", "3", "--map", "fold", "3,3,3")
    assert code == 0
    assert out == (
        "9\n9~\n6,3\n6,3~\n3,3,3\n3~,3,3\n"
        "same_overlines: 3\none_more_overline: 3\nexpected_size: 6\n"
    )


def test_preimages_json_schema(capsys):
    code, out, _ = run(
        capsys,
        "preimages", "--t", "3", "--map", "fold", "3,3,3,1~,1", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert list(payload) == [
        "mu", "t", "fiber", "same_overlines", "one_more_overline", "expected_size",
    ]
    assert payload["mu"] == "3,3,3,1~,1" and payload["expected_size"] == 7
    assert len(payload["fiber"]) == 7


def test_preimages_merge_with_check(capsys):
    code, out, _ = run(
        capsys, "preimages", "--t", "3", "--map", "merge", "3,3,3", "--check"
    )
    assert code == 0
    assert out.splitlines()[-1] == "expected_size: 6"


def test_preimages_check_detects_wrong_fiber(capsys, monkeypatch):
    real = cli.fold_preimages

    def corrupted(mu, t):
        report = real(mu, t)
        return type(report)(
            mu=report.mu,
            t=report.t,
            fiber=report.fiber[:-1],
            same_marks=report.same_marks,
            one_more_mark=report.one_more_mark,
        )

    monkeypatch.setattr(cli, "fold_preimages", corrupted)
    code, _, err = run(
        capsys, "preimages", "--t", "3", "--map", "fold", "3,3,3", "--check"
    )
    assert code == 2 and "cross-check failed" in err


def test_preimages_domain_error(capsys):
    code, _, err = run(capsys, "preimages", "--t", "3", "--map", "fold", "4,1")
    assert code == 1 and "error:" in err


# -- verify -------------------------------------------------------------------


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "chu", "--t", "1..2", "--order", "12")
    assert code == 0
    entries = json.loads(out)
    assert [e["t"] for e in entries] == [1, 2]
    for entry in entries:
        assert list(entry) == ["suite", "t", "order", "pass", "details"]
        assert entry["suite"] == "chu" and entry["order"] == 12 and entry["pass"]


def test_verify_all_small(capsys):
    code, out, _ = run(
        capsys, "verify", "--t", "1..2", "--order", "10", "--max-n", "6"
    )
    assert code == 0
    entries = json.loads(out)
    suites = {entry["suite"] for entry in entries}
    assert suites == {"gf", "fibers", "chu", "transform", "chain"}
    assert all(entry["pass"] for entry in entries)
    # fibers run once per map per bound
    assert sum(1 for e in entries if e["suite"] == "fibers") == 4


def test_verify_failure_exits_2(capsys, monkeypatch):
    monkeypatch.setattr(cli, "check_q_chu_vandermonde", lambda *a, **k: False)
    code, out, _ = run(capsys, "verify", "--suite", "chu", "--t", "1", "--order", "8")
    assert code == 2
    assert json.loads(out)[0]["pass"] is False


def test_verify_env_default_order(capsys, monkeypatch):
    monkeypatch.setenv("OVERPART_DEFAULT_ORDER", "8")
    code, out, _ = run(capsys, "verify", "--suite", "gf", "--t", "1")
    assert code == 0
    assert json.loads(out)[0]["order"] == 8


def test_verify_env_rejects_garbage(capsys, monkeypatch):
    monkeypatch.setenv("OVERPART_DEFAULT_ORDER", "soon")
    code, _, err = run(capsys, "verify", "--suite", "gf", "--t", "1")
    assert code == 1 and "OVERPART_DEFAULT_ORDER" in err


def test_verify_bad_range(capsys):
    assert run(capsys, "verify", "--t", "5..1")[0] == 1
    assert run(capsys, "verify", "--t", "x")[0] == 1


# -- shared behavior -----------------------------------------------------------


def test_missing_subcommand_is_usage_error(capsys):
    assert run(capsys)[0] == 1


def test_output_file_matches_stdout(tmp_path, capsys):
    code, out, _ = run(capsys, "table", "--t", "2", "--max-n", "6", "--format", "json")
    assert code == 0
    path = tmp_path / "table.json"
    code2, out2, _ = run(
        capsys,
        "table", "--t", "2", "--max-n", "6", "--format", "json",
        "--output", str(path),
    )
    assert code2 == 0 and out2 == ""
    assert path.read_text(encoding="utf-8") == out


def test_invocations_are_deterministic(capsys):
    first = run(capsys, "verify", "--suite", "chain", "--t", "2", "--order", "14")
    second = run(capsys, "verify", "--suite", "chain", "--t", "2", "--order", "14")
    assert first == second


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "overgap", "table", "--t", "3", "--max-n", "5"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert result.returncode == 0
    assert result.stdout == TABLE_T3


def test_broken_pipe_exits_without_traceback():
    # stdout is a pipe whose reader is already gone, as with `overgap | head`
    reader, writer = os.pipe()
    os.close(reader)
    proc = subprocess.Popen(
        [sys.executable, "-m", "overgap", "table", "--t", "3", "--max-n", "5"],
        stdout=writer,
        stderr=subprocess.PIPE,
    )
    os.close(writer)
    _, err = proc.communicate(timeout=60)
    assert proc.returncode == 1
    assert err == b""
