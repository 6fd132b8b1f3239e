from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from kfcrit import harness
from kfcrit.cli import main
from kfcrit.harness import CheckResult


def run(argv, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    out = io.StringIO()
    code = main(argv, out=out)
    return code, [json.loads(line) for line in out.getvalue().splitlines()]


@pytest.fixture
def g6file(tmp_path):
    def make(*lines):
        p = tmp_path / "in.g6"
        p.write_text("".join(line + "\n" for line in lines))
        return str(p)
    return make


def test_check_examples(g6file):
    code, recs = run(["check", "--k", "2", "--minimal", g6file("C~")])
    assert code == 0
    assert recs[0]["k_factor_critical"]["holds"] and recs[0]["minimal"]["holds"]
    code, recs = run(["check", "--k", "1", g6file("Dhc", "A_")])
    assert code == 0
    assert recs[0]["k_factor_critical"] == {"holds": True}
    assert recs[1]["k_factor_critical"]["holds"] is False
    assert recs[1]["k_factor_critical"]["failing_removal"] == [0]


def test_check_evidence_uses_original_ids(g6file):
    # C6 at k = 2: removing {0, 2} strands vertex 1
    code, recs = run(["check", "--k", "2", g6file("EhEG")])
    kfc = recs[0]["k_factor_critical"]
    assert code == 0 and kfc["holds"] is False and kfc["failing_removal"] == [0, 2]
    cert = kfc["certificate"]
    assert len(cert["odd_components"]) > len(cert["X"])
    assert [1] in cert["odd_components"]
    used = set(cert["X"]).union(*map(set, cert["odd_components"]))
    assert used <= {1, 3, 4, 5}


def test_check_k5_minimal_gives_edge(g6file):
    _, recs = run(["check", "--k", "1", "--minimal", g6file("D~{")])
    assert recs[0]["minimal"] == {"holds": False, "edge": [0, 1]}


def test_check_claw_and_brick(g6file):
    _, recs = run(["check", "--claw-free", "--brick", "--minimal-brick", g6file("C~", "Cs")])
    k4, claw = recs
    assert k4["claw_free"]["holds"] and k4["brick"]["holds"] and k4["minimal_brick"]["holds"]
    assert claw["claw_free"] == {"holds": False, "claw": [0, [1, 2, 3]]}
    assert not claw["brick"]["holds"]


def test_check_needs_k(g6file):
    assert run(["check", g6file("C~")])[0] == 2


@pytest.mark.parametrize(
    "text, k, edge, size",
    [("Dhc", 1, "0,1", 1), ("C~", 2, "0,1", 2)],
)
def test_witness_examples(g6file, text, k, edge, size):
    code, recs = run(["witness", "--k", str(k), "--edge", edge, "--minimize", g6file(text)])
    assert code == 0 and recs[0]["found"] and recs[0]["witness"]["size"] == size


def test_witness_c5_set(g6file):
    _, recs = run(["witness", "--k", "1", "--edge", "0,1", g6file("Dhc")])
    w = recs[0]["witness"]
    assert w["S"] == [2] and w["component_u"] == [0, 3, 4] and w["component_v"] == [1]


def test_witness_none_for_k5(g6file):
    code, recs = run(["witness", "--k", "1", "--edge", "0,1", g6file("D~{")])
    assert code == 0 and recs[0]["found"] is False and recs[0]["witness"] is None


def test_witness_non_edge_is_usage_error(g6file):
    assert run(["witness", "--k", "1", "--edge", "0,2", g6file("Dhc")])[0] == 2
    assert run(["witness", "--k", "1", "--edge", "zero", g6file("Dhc")])[0] == 2


def test_classify(g6file):
    code, recs = run(["classify", "--k", "2", g6file("ICOe`XeeO")])
    assert code == 0
    verdicts = {tuple(r["edge"]): r["verdict"] for r in recs[0]["edges"]}
    assert verdicts[(6, 8)] == verdicts[(7, 9)] == "type1"
    assert sum(v == "not_applicable" for v in verdicts.values()) == len(verdicts) - 2


def test_classify_precondition_failure_is_usage(g6file):
    code, recs = run(["classify", "--k", "2", "--verify-preconditions", g6file("D~{")])
    assert code == 2 and "error" in recs[0]


def test_partition(g6file):
    code, recs = run(["partition", "--k", "2", g6file("C~", "Dhc")])
    assert code == 2  # C5 has minimum degree 2, not 3
    assert recs[0]["counting_inequality"] == {"lhs": 2, "rhs": 12, "holds": True}
    assert "error" in recs[1]


def test_verify_examples(g6file, tmp_path):
    code, recs = run(["verify", "--generate", "5", "--k", "1", "--checks", "thm_min_degree", "--quiet"])
    assert code == 0 and recs[0]["violation_count"] == 0
    code, recs = run(["verify", "--generate", "4", "--k", "2", "--checks", "thm_min_degree,thm_degree_count",
                      "--quiet"])
    assert code == 0 and "C~" in recs[0]["checks"]["thm_min_degree"]["samples"]
    empty = tmp_path / "empty.g6"
    empty.write_text("")
    code, recs = run(["verify", "--input", str(empty), "--quiet"])
    assert code == 0 and recs[0]["graphs_scanned"] == 0


def test_verify_output_is_byte_stable():
    outs = []
    for _ in range(2):
        out = io.StringIO()
        main(["verify", "--generate", "5", "--k", "1,2", "--no-timing", "--quiet"], out=out)
        outs.append(out.getvalue())
    assert outs[0] == outs[1] and "wall_time_s" not in outs[0]


def _violating(facts):
    r = CheckResult()
    r.expect(False, "forced")
    return r


def test_exit_code_matrix(g6file, monkeypatch, capsys):
    good = g6file("C~", "Dhc")
    assert run(["verify", "--input", good, "--k", "1,2", "--quiet"])[0] == 0
    assert run(["check", "--k", "1", good])[0] == 0
    bad = g6file("C~", "C~~")
    assert run(["verify", "--input", bad, "--k", "2", "--quiet"])[0] == 3
    assert run(["check", "--k", "2", bad])[0] == 3
    assert run(["verify", "--generate", "9", "--quiet"])[0] == 2
    assert run(["verify", "--quiet"])[0] == 2
    assert run(["verify", "--generate", "3", "--checks", "bogus", "--quiet"])[0] == 2
    assert run(["frobnicate"])[0] == 2
    assert run(["verify", "--input", "/nonexistent.g6", "--quiet"])[0] == 2
    monkeypatch.setitem(harness.CHECKS, "thm_conn", _violating)
    assert run(["verify", "--input", good, "--k", "2", "--checks", "thm_conn", "--quiet"])[0] == 1
    # a violation outranks parse errors in the same run
    assert run(["verify", "--input", bad, "--k", "2", "--checks", "thm_conn", "--quiet"])[0] == 1


def test_stdin_and_summary(monkeypatch, capsys):
    code, recs = run(["verify", "--input", "-", "--k", "2"], stdin="C~\n", monkeypatch=monkeypatch)
    assert code == 0 and recs[0]["graphs_scanned"] == 1
    assert "violations: 0" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kfcrit", "check", "--k", "2", "--minimal"],
                          input="C~\n", capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["minimal"]["holds"] is True
