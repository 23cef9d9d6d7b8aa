import json
import subprocess
import sys

import pytest

from randic import cli
from randic.graph import path_graph, to_graph6
from randic.radical import RadicalSum
from randic.verify import CHECK_BOUND, Violation, VerifyReport


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_k3(capsys):
    code, out, _ = run(capsys, "compute", "--graph6", "Bw")
    assert code == 0
    assert "R = 3/2·√1 ~ 1.500000" in out and "D = 1" in out and "f = 1·√1 ~ 1.000000" in out


def test_compute_graph6_and_edges_agree(capsys, tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text("n 4\n0 1\n1 2\n2 3\n")
    _, a, _ = run(capsys, "compute", "--edges", str(path))
    _, b, _ = run(capsys, "compute", "--graph6", to_graph6(path_graph(4)))
    assert a == b and "D = 3" in a


def test_compute_records(capsys):
    code, out, _ = run(capsys, "compute", "--graph6", "C~", "--format", "records", "--digits", "3")
    rec = json.loads(out)
    assert code == 0 and rec["R"] == "2·√1" and rec["D"] == 1 and rec["f_decimal"] == "1.500"


def test_essential_and_reduce(capsys):
    code, out, _ = run(capsys, "essential", "--graph6", "C~")
    assert code == 0 and "blocks" in out
    code, out, _ = run(capsys, "reduce", "--graph6", "Cr", "--format", "records")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and lines[-1]["type"] == "final"


def test_verify_outputs(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "lemmas", "--exhaustive", "4")
    assert code == 0 and out == "0 violations / 38 scanned\n"
    code, out, _ = run(capsys, "verify", "conjecture", "--exhaustive", "4")
    assert code == 0 and out.startswith("0 violations / 38 scanned") and "P4" in out
    dest = tmp_path / "rep.jsonl"
    code, out, _ = run(capsys, "verify", "lemmas", "--trees", "10,5", "--seed", "3", "--format", "records", "--output", str(dest))
    assert code == 0 and out == ""
    summary = json.loads(dest.read_text().splitlines()[-1])
    assert summary["scanned"] == 5 and summary["passed"]


def test_verify_skip_bad(capsys, tmp_path):
    path = tmp_path / "in.g6"
    path.write_text("Bw\nnot graph6 \x7f\nBW\n")
    code, _, err = run(capsys, "verify", "conjecture", "--input", str(path))
    assert code == 2 and "line 2" in err
    code, out, err = run(capsys, "verify", "conjecture", "--input", str(path), "--skip-bad")
    assert code == 0 and "warning" in err and out.startswith("0 violations / 2 scanned")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["compute"],
        ["compute", "--graph6", "Bw", "--digits", "0"],
        ["compute", "--graph6", "B\x7f"],
        ["compute", "--edges", "/nonexistent/file"],
        ["verify", "lemmas", "--exhaustive", "8"],
        ["verify", "lemmas", "--exhaustive", "4", "--suites", "nonsense"],
        ["verify", "lemmas", "--gnp", "10,0.5"],
        ["verify", "lemmas", "--gnp", "10,1.5,3"],
        ["verify", "conjecture", "--exhaustive", "4", "--workers", "0"],
        ["verify", "bogus"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_hard_violation_exits_one(capsys, monkeypatch):
    def fake(*args, **kwargs):
        rep = VerifyReport("conjecture", scanned=1)
        rep.violations.append(Violation("Bw", CHECK_BOUND, RadicalSum({1: -1})))
        return rep

    monkeypatch.setattr(cli, "verify_conjecture", fake)
    code, out, _ = run(capsys, "verify", "conjecture", "--graph6", "Bw")
    assert code == 1 and out.startswith("1 violations / 1 scanned")


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "randic", "compute", "--graph6", "Bw", "--format", "records"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert res.returncode == 0 and json.loads(res.stdout)["D"] == 1
