from __future__ import annotations

import json

import pytest

from kfcrit import harness
from kfcrit.graph6 import write_graph6
from kfcrit.harness import (
    CheckResult,
    ConfigError,
    StreamConfig,
    degree_partition,
    enumerate_labeled_graphs,
    replay_violation,
    verify_stream,
)

from .helpers import BOWTIE, C5, K4, K5, PETERSEN


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 8), (4, 64)])
def test_enumeration_counts(n, count):
    gs = list(enumerate_labeled_graphs(n))
    assert len(gs) == count
    assert len({tuple(g.adj) for g in gs}) == count


def test_enumeration_order_is_graph6_bit_order():
    gs = list(enumerate_labeled_graphs(3))
    assert [[tuple(e) for e in g.edges()] for g in gs[:4]] == [[], [(0, 1)], [(0, 2)], [(0, 1), (0, 2)]]


def test_enumeration_range():
    with pytest.raises(ValueError):
        next(enumerate_labeled_graphs(8))


def _samples(report, check):
    return report.checks[check].samples


def test_small_scan_k1_finds_c5_and_bowtie():
    cfg = StreamConfig(generate=5, k_values=(1,), checks=("lemma_min_fc", "thm_min_degree"), sample_limit=10**6)
    rep = verify_stream(cfg)
    assert rep.violation_count == 0
    found = set(_samples(rep, "lemma_min_fc"))
    assert write_graph6(C5).decode() in found
    assert write_graph6(BOWTIE).decode() in found
    assert set(_samples(rep, "thm_min_degree")) >= {write_graph6(C5).decode(), write_graph6(BOWTIE).decode()}


def test_small_scan_k2_matches_k4():
    cfg = StreamConfig(generate=4, min_n=4, k_values=(2,), checks=("thm_min_degree", "thm_degree_count"),
                       sample_limit=100)
    rep = verify_stream(cfg)
    assert rep.violation_count == 0
    assert "C~" in _samples(rep, "thm_min_degree")
    assert "C~" in _samples(rep, "thm_degree_count")


def test_empty_stream():
    rep = verify_stream(StreamConfig(lines=()))
    assert rep.graphs_scanned == 0 and rep.violation_count == 0 and rep.exit_code() == 0


def test_parse_errors_recorded_and_run_continues():
    rep = verify_stream(StreamConfig(lines=("C~", "C~~", "Dhc")))
    assert rep.graphs_scanned == 2
    assert [e["line"] for e in rep.parse_errors] == [2]
    assert rep.exit_code() == 3


def test_counters_and_parity():
    rep = verify_stream(StreamConfig(lines=("C~", "Dhc", "@"), k_values=(1, 2)))
    assert rep.pairs_admitted == 2  # (K4, 2) and (C5, 1)
    assert rep.parity_skipped == 2
    assert rep.range_skipped == 2
    assert rep.graphs_matching_filters <= rep.graphs_scanned


def test_structural_status_distinguishes_vacuity():
    rep = verify_stream(StreamConfig(lines=("C~",), k_values=(2,), checks=("structural_props", "forest_claim")))
    d = rep.to_dict()
    assert d["checks"]["structural_props"]["status"] == "no_applicable_instance"
    assert "no applicable instance found" in rep.summary()
    rep = verify_stream(StreamConfig(lines=("Ffzn_",), k_values=(3,), checks=("structural_props",)))
    assert rep.to_dict()["checks"]["structural_props"]["status"] == "passed"


def test_config_validation():
    bad = [
        StreamConfig(),
        StreamConfig(generate=8),
        StreamConfig(generate=3, k_values=()),
        StreamConfig(generate=3, k_values=(0,)),
        StreamConfig(generate=3, filters=("shiny",)),
        StreamConfig(generate=3, checks=("nope",)),
        StreamConfig(generate=3, input="x"),
        StreamConfig(generate=3, workers=0),
    ]
    for cfg in bad:
        with pytest.raises(ConfigError):
            verify_stream(cfg)


def test_unreadable_input():
    with pytest.raises(ConfigError):
        verify_stream(StreamConfig(input="/nonexistent/file.g6"))


def test_report_independent_of_workers():
    cfg = dict(generate=6, k_values=(1, 2), checks=harness.CHECK_ORDER)
    reports = []
    for workers in (1, 2):
        d = verify_stream(StreamConfig(workers=workers, **cfg), chunk=1 << 12).to_dict(include_timing=False)
        assert d["config"].pop("workers") == workers  # the echo is the only difference
        reports.append(json.dumps(d, sort_keys=True))
    assert reports[0] == reports[1]
    assert json.loads(reports[0])["violation_count"] == 0


def _violating(facts):
    # pretends every graph with an odd number of edges breaks the theorem
    r = CheckResult()
    r.expect(facts.g.m % 2 == 0, "odd edge count")
    return r


def test_violations_recorded_and_replayable(monkeypatch):
    monkeypatch.setitem(harness.CHECKS, "thm_conn", _violating)
    rep = verify_stream(StreamConfig(lines=("C~", "Dhc", "A_"), k_values=(1, 2), checks=("thm_conn",)))
    assert rep.violation_count == rep.checks["thm_conn"].violations == 1
    assert rep.violations == [{"graph6": "Dhc", "k": 1, "check": "thm_conn", "detail": "odd edge count"}]
    assert rep.exit_code() == 1
    replay = replay_violation(rep.violations[0])
    assert replay.failures == ["odd edge count"]


def test_violations_beat_parse_errors(monkeypatch):
    monkeypatch.setitem(harness.CHECKS, "thm_conn", _violating)
    rep = verify_stream(StreamConfig(lines=("Dhc", "!!"), k_values=(1,), checks=("thm_conn",)))
    assert rep.parse_errors and rep.exit_code() == 1


def test_fail_fast_stops_at_first(monkeypatch):
    monkeypatch.setitem(harness.CHECKS, "thm_conn", _violating)
    lines = ("Dhc",) * 5
    full = verify_stream(StreamConfig(lines=lines, k_values=(1,), checks=("thm_conn",)))
    fast = verify_stream(StreamConfig(lines=lines, k_values=(1,), checks=("thm_conn",), fail_fast=True))
    assert full.violation_count == 5
    assert fast.violation_count == 1 and fast.stopped_early and fast.graphs_scanned == 1


def test_real_replay_of_clean_graph_has_no_failures():
    r = replay_violation({"graph6": "C~", "k": 2, "check": "thm_conn"})
    assert r.failures == [] and r.assertions > 0


def test_degree_partition_examples():
    p = degree_partition(K4, 2)
    assert sorted(p.to_dict()["V1"]) == [0, 1, 2, 3] and p.G2.n == 0
    assert (p.count_lhs, p.count_rhs) == (2, 12) and p.counting_inequality_holds
    p = degree_partition(C5, 1)
    assert sorted(p.to_dict()["V1"]) == [0, 1, 2, 3, 4] and p.G2.n == 0
    with pytest.raises(ValueError):
        degree_partition(K5, 1)
    with pytest.raises(ValueError):
        degree_partition(PETERSEN, 3)


def test_degree_partition_type2_instance():
    from kfcrit.graph6 import parse_graph6

    p = degree_partition(parse_graph6("Ffzn_"), 3)
    d = p.to_dict()
    assert d["V2"] == [0, 1] and d["E2"] == [[0, 1]] and d["E1"] == []
    assert d["counting_inequality"] == {"lhs": 6, "rhs": 20, "holds": True}


def test_degree_count_strictness_noted():
    rep = verify_stream(StreamConfig(lines=("C~",), k_values=(2,), checks=("thm_degree_count",)))
    t = rep.checks["thm_degree_count"]
    assert t.hypothesis_matched == 1 and t.notes == {"strict": 1}


def test_degree_partition_first_k2_instance():
    from kfcrit.graph6 import parse_graph6

    d = degree_partition(parse_graph6("ICOe`XeeO"), 2).to_dict()
    assert d["V2"] == [6, 7, 8, 9]
    assert d["E1"] == [[6, 8], [7, 9]] and d["E2"] == []
    assert d["type1_forest"] and d["counting_inequality"] == {"lhs": 6, "rhs": 18, "holds": True}
