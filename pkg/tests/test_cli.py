import csv
import io
import json
import shutil
import subprocess

import numpy as np
import pytest

from hullcraft.cli import main, parse_range
from hullcraft.eaqec import CSV_COLUMNS, EaqecParams, is_mds_eaqec
from hullcraft.field import tower_for_q
from hullcraft.lincode import LinearCode
from hullcraft.rsfam import rs_eval


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_code(tmp_path, C, name="code.txt"):
    path = tmp_path / name
    path.write_text(C.to_text())
    return str(path)


def test_parse_range():
    assert parse_range("7") == [7]
    assert parse_range("4:6") == [4, 5, 6]
    assert parse_range(None) is None


def test_enumerate_subgroup(capsys):
    code, out, _ = run(capsys, "enumerate", "--q", "3", "--family", "subgroup", "--n", "8", "--k", "4")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert len(recs) == 1 + recs[0]["hull_dim"]
    assert {"n": 8, "k": 2, "d": 5, "c": 2} in [r["eaqec"] for r in recs]
    for r in recs:
        e = r["eaqec"]
        assert is_mds_eaqec(EaqecParams(e["n"], e["k"], e["d"], e["c"])) == r["mds"]


def test_enumerate_sorted_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "--q", "4", "--n", "5:10", "--d", "2:6", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == CSV_COLUMNS
    keys = [(int(r[2]), int(r[4]), int(r[10])) for r in rows[1:]]
    assert keys == sorted(keys) and len(keys) > 10


@pytest.mark.parametrize("family,extra", [
    ("coset", ["--n", "10", "--k", "6"]),
    ("punctured", ["--n", "9", "--k", "6", "--t", "1"]),
    ("twisted", ["--n", "5", "--k", "3"]),
    ("generic", ["--n", "7", "--k", "4"]),
])
def test_enumerate_families(capsys, family, extra):
    code, out, _ = run(capsys, "enumerate", "--q", "4", "--family", family, *extra)
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs and all(r["q"] == 4 for r in recs)


def test_enumerate_out_file(capsys, tmp_path):
    path = tmp_path / "out.jsonl"
    code, out, _ = run(capsys, "enumerate", "--q", "3", "--n", "8", "--d", "5", "--out", str(path))
    assert code == 0 and out == ""
    assert len(path.read_text().splitlines()) == 3


@pytest.mark.parametrize("argv", [
    ["enumerate", "--q", "3", "--n", "8", "--k", "9"],
    ["enumerate", "--q", "2", "--family", "hull-reduce", "--n", "3", "--k", "2"],
    ["enumerate", "--q", "2", "--family", "subgroup", "--n", "3", "--k", "2"],
    ["enumerate", "--q", "6", "--n", "8", "--k", "4"],
    ["enumerate", "--q", "3", "--n", "x:y", "--k", "4"],
    ["enumerate", "--q", "3", "--n", "8", "--k", "4", "--budget", "0"],
    ["verify", "--q", "3", "--theorem", "9.9"],
    ["bogus"],
])
def test_invalid_config_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--q", "3", "--theorem", "3.2")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


def test_verify_reports_failures(capsys):
    code, out, _ = run(capsys, "verify", "--q", "4", "--theorem", "4.1")
    assert code == 1
    fails = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert fails and all("n=15 k=9" in line for line in fails)


def test_mindist(capsys, tmp_path):
    t = tower_for_q(3)
    path = write_code(tmp_path, rs_eval(t, t.subgroup(8), 4))
    assert run(capsys, "mindist", path)[:2] == (0, "8 4 5 MDS\n")
    rep = write_code(tmp_path, LinearCode.from_generator(t, np.array([[1, 1]]), 2), "rep.txt")
    assert run(capsys, "mindist", rep)[:2] == (0, "2 1 2 MDS\n")


def test_mindist_budget(capsys, tmp_path, monkeypatch):
    t = tower_for_q(3)
    path = write_code(tmp_path, LinearCode.full_space(t, 13))
    assert run(capsys, "mindist", path, "--budget", "1000")[0] == 3
    monkeypatch.setenv("HULLCRAFT_BUDGET", "1000")
    assert run(capsys, "mindist", path)[0] == 3


def test_mindist_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("GF(3^1) p=3 modulus=1,0,1\n2 x\n")
    assert run(capsys, "mindist", str(bad))[0] == 2
    assert run(capsys, "mindist", str(tmp_path / "missing.txt"))[0] == 2


def test_worker_count_does_not_change_bytes(capsys):
    argv = ["enumerate", "--q", "4", "--n", "4:17", "--d", "2:9", "--format", "csv"]
    _, one, _ = run(capsys, *argv, "--workers", "1")
    _, four, _ = run(capsys, *argv, "--workers", "4")
    assert one == four


@pytest.mark.skipif(shutil.which("hullcraft") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["hullcraft", "verify", "--q", "3", "--theorem", "9.9"], capture_output=True)
    assert proc.returncode == 2
