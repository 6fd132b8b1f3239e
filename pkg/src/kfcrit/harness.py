"""Exhaustive and corpus-driven verification of the degree theorems.

A run streams graphs (every labelled graph up to 7 vertices, or graph6
lines), pairs each with every requested k, applies the optional filters and
then runs the selected checks.  Each check is an implication: it counts a
graph only when its own hypothesis holds, and records a violation when the
conclusion fails.
"""

from __future__ import annotations

import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import cached_property
from itertools import repeat

from . import kernels
from .graph import Edge, Graph, induced_subgraph
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .structure import (
    EdgeType,
    StructuralViolation,
    _is_forest,
    check_structural_propositions,
    classify_edge,
)

MAX_GENERATE = 7

FILTERS = ("connected", "claw_free", "k_factor_critical", "minimal", "k_plus_1_connected")
CHECK_ORDER = (
    "thm_conn",
    "lemma_min_fc",
    "thm_min_degree",
    "thm_degree_count",
    "witness_biconditional",
    "structural_props",
    "forest_claim",
)
STRUCTURAL_CHECKS = ("structural_props", "forest_claim")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class StreamConfig:
    """What to scan and what to assert.

    Exactly one source: ``generate`` (all labelled graphs with
    ``min_n <= n <= generate``), ``input`` (a graph6 file path, ``"-"`` for
    standard input) or ``lines`` (an in-memory list of graph6 lines).
    """

    generate: int | None = None
    min_n: int = 1
    input: str | None = None
    lines: tuple[str, ...] | None = None
    k_values: tuple[int, ...] = (1,)
    filters: tuple[str, ...] = ()
    checks: tuple[str, ...] = CHECK_ORDER
    fail_fast: bool = False
    workers: int = 1
    sample_limit: int = 5

    def validate(self) -> None:
        sources = [self.generate is not None, self.input is not None, self.lines is not None]
        if sum(sources) != 1:
            raise ConfigError("exactly one of generate / input / lines is required")
        if self.generate is not None and not 1 <= self.generate <= MAX_GENERATE:
            raise ConfigError(f"internal enumeration is limited to 1 <= n <= {MAX_GENERATE}")
        if not 1 <= self.min_n:
            raise ConfigError("min_n must be positive")
        if not self.k_values or any(not isinstance(k, int) or k < 1 for k in self.k_values):
            raise ConfigError("k_values must be a nonempty list of positive integers")
        for f in self.filters:
            if f not in FILTERS:
                raise ConfigError(f"unknown filter {f!r}; choose from {', '.join(FILTERS)}")
        if not self.checks:
            raise ConfigError("no checks selected")
        for c in self.checks:
            if c not in CHECKS:
                raise ConfigError(f"unknown check {c!r}; choose from {', '.join(CHECKS)}")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")

    def echo(self) -> dict:
        d = asdict(self)
        d.pop("lines")
        d["source"] = (
            f"generate:{self.min_n}..{self.generate}" if self.generate is not None
            else f"input:{self.input}" if self.input is not None
            else "lines"
        )
        for key in ("k_values", "filters", "checks"):
            d[key] = list(d[key])
        return d


# --------------------------------------------------------------- enumeration

def _pairs(n: int) -> list[tuple[int, int]]:
    # graph6 bit order: (0,1), (0,2), (1,2), (0,3), ...
    return [(i, j) for j in range(1, n) for i in range(j)]


def adjacency_from_mask(n: int, mask: int, pairs=None) -> list[int]:
    pairs = pairs or _pairs(n)
    adj = [0] * n
    b = 0
    while mask:
        if mask & 1:
            i, j = pairs[b]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        mask >>= 1
        b += 1
    return adj


def enumerate_labeled_graphs(n: int):
    """All 2^(n(n-1)/2) labelled graphs on n vertices, in edge-bitmask order
    (bit b is the b-th vertex pair in graph6 order)."""
    if not isinstance(n, int) or not 1 <= n <= MAX_GENERATE:
        raise ValueError(f"n must be in 1..{MAX_GENERATE}, got {n}")
    pairs = _pairs(n)
    for mask in range(1 << len(pairs)):
        yield Graph(n, adjacency_from_mask(n, mask, pairs), check=False)


# ------------------------------------------------------------ per-graph facts

class Facts:
    """Lazily computed properties of one (graph, k) pair."""

    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.adj = g.adj
        self.n = g.n

    @cached_property
    def connected(self) -> bool:
        return kernels.is_connected(self.adj, self.g.full)

    @cached_property
    def claw_free(self) -> bool:
        return kernels.find_claw(self.adj) is None

    @cached_property
    def kfc(self) -> bool:
        return kernels.kfc_failure(self.adj, self.k) == -1

    @cached_property
    def minimal(self) -> bool:
        return self.kfc and kernels.non_minimal_edge(self.adj, self.k) is None

    @cached_property
    def kappa(self) -> int:
        return kernels.vertex_connectivity(self.adj)

    @cached_property
    def lam(self) -> int:
        return kernels.edge_connectivity(self.adj)

    @cached_property
    def min_degree(self) -> int:
        return self.g.min_degree()

    def passes(self, name: str) -> bool:
        if name == "k_factor_critical":
            return self.kfc
        if name == "k_plus_1_connected":
            return self.kappa >= self.k + 1
        return getattr(self, name)


# ------------------------------------------------------------ degree partition

@dataclass(frozen=True)
class DegreePartition:
    """Split of a graph with minimum degree k+1 into V1 (degree k+1) and the
    rest, with the edge types inside the rest."""

    k: int
    V1: frozenset[int]
    G1: Graph
    G1_ids: tuple[int, ...]
    G2: Graph
    G2_ids: tuple[int, ...]
    E1: tuple[Edge, ...]
    E2: tuple[Edge, ...]
    unclassified: tuple[Edge, ...]
    count_lhs: int
    count_rhs: int

    @property
    def counting_inequality_holds(self) -> bool:
        return self.count_lhs <= self.count_rhs

    @property
    def type1_is_forest(self) -> bool:
        return _is_forest(list(self.E1))

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "V1": sorted(self.V1),
            "V2": list(self.G2_ids),
            "E1": [list(e) for e in self.E1],
            "E2": [list(e) for e in self.E2],
            "unclassified": [list(e) for e in self.unclassified],
            "type1_forest": self.type1_is_forest,
            "counting_inequality": {
                "lhs": self.count_lhs,
                "rhs": self.count_rhs,
                "holds": self.counting_inequality_holds,
            },
        }


def degree_partition(g: Graph, k: int) -> DegreePartition:
    """V1 = vertices of degree k+1, G1 = G[V1], G2 = G - V1, and the type-1 /
    type-2 split of E(G2).

    Also evaluates (k+2)|V(G2)| - (3|V(G2)| - 2) <= (k+1)|V(G1)|.  For k < 2
    edge types are undefined and E(G2) is reported as ``unclassified``.
    Raises StructuralViolation if an edge of G2 breaks the dichotomy.
    """
    if g.n == 0 or g.min_degree() != k + 1:
        raise ValueError(f"degree partition needs minimum degree k+1={k + 1}, got {g.min_degree() if g.n else None}")
    V1 = frozenset(v for v in g.vertices if g.degree(v) == k + 1)
    G1, ids1 = induced_subgraph(g, V1)
    G2, ids2 = induced_subgraph(g, (v for v in g.vertices if v not in V1))
    edges2 = [Edge(ids2[a], ids2[b]) for a, b in G2.edges()]
    E1, E2, rest = [], [], []
    for e in edges2:
        if k < 2:
            rest.append(e)
            continue
        verdict = classify_edge(g, k, e).verdict
        if verdict is EdgeType.TYPE1:
            E1.append(e)
        elif verdict is EdgeType.TYPE2:
            E2.append(e)
        else:
            rest.append(e)
    n2, n1 = G2.n, G1.n
    lhs = (k + 2) * n2 - (3 * n2 - 2)
    rhs = (k + 1) * n1
    return DegreePartition(k, V1, G1, ids1, G2, ids2, tuple(E1), tuple(E2), tuple(rest), lhs, rhs)


# -------------------------------------------------------------------- checks

class CheckResult:
    __slots__ = ("assertions", "failures", "applicable", "notes")

    def __init__(self):
        self.assertions = 0
        self.failures: list[str] = []
        self.applicable = False
        self.notes: dict[str, int] = {}

    def expect(self, ok: bool, detail: str) -> None:
        self.assertions += 1
        if not ok:
            self.failures.append(detail)


def check_thm_conn(f: Facts) -> CheckResult | None:
    if not f.kfc:
        return None
    r = CheckResult()
    k = f.k
    r.expect(f.kappa >= k, f"vertex connectivity {f.kappa} < k={k}")
    r.expect(f.lam >= k + 1, f"edge connectivity {f.lam} < k+1={k + 1}")
    if k >= 2:
        r.expect(kernels.kfc_failure(f.adj, k - 2) == -1, f"not ({k}-2)-factor-critical")
    return r


def check_lemma_min_fc(f: Facts) -> CheckResult | None:
    if f.k != 1 or not f.minimal:
        return None
    r = CheckResult()
    r.expect(f.min_degree == 2, f"minimal factor-critical with minimum degree {f.min_degree}")
    return r


def check_thm_min_degree(f: Facts) -> CheckResult | None:
    if not (f.claw_free and f.minimal):
        return None
    r = CheckResult()
    r.expect(f.min_degree == f.k + 1, f"minimum degree {f.min_degree} != k+1={f.k + 1}")
    return r


def check_thm_degree_count(f: Facts) -> CheckResult | None:
    if not (f.claw_free and f.minimal and f.kappa >= f.k + 1):
        return None
    r = CheckResult()
    k, n = f.k, f.n
    v1 = sum(1 for d in f.g.degrees() if d == k + 1)
    lhs, rhs = 2 * k * v1, (k - 1) * n
    r.expect(lhs >= rhs, f"2k|V1| = {lhs} < (k-1)n = {rhs}")
    r.notes["strict" if lhs > rhs else "equal"] = 1
    return r


def check_witness_biconditional(f: Facts) -> CheckResult | None:
    if not f.kfc:
        return None
    r = CheckResult()
    k, adj = f.k, f.adj
    every_edge = True
    for e in f.g.edges():
        u, v = e
        has_witness = kernels.find_witness(adj, k, u, v, k, f.n - 2) != -1
        stays_critical = kernels.kfc_failure(adj, k, (1 << u) | (1 << v), u, v) == -1
        every_edge &= has_witness
        r.expect(has_witness != stays_critical,
                 f"edge {u}-{v}: witness={has_witness} but G-e critical={stays_critical}")
    r.expect(f.minimal == every_edge, f"minimal={f.minimal} but every edge has a witness={every_edge}")
    return r


def check_structural_props(f: Facts) -> CheckResult | None:
    if f.k < 2 or not (f.claw_free and f.minimal):
        return None
    r = CheckResult()
    report = check_structural_propositions(f.g, f.k)
    r.applicable = report.applicable_edges > 0
    r.assertions += len(report.classifications) + 1
    for v in report.violations:
        edge = f" {v.edge.u}-{v.edge.v}" if v.edge else ""
        r.failures.append(f"{v.check}{edge}: {v.detail}")
    return r


def check_forest_claim(f: Facts) -> CheckResult | None:
    if f.k < 2 or not (f.claw_free and f.minimal and f.kappa >= f.k + 1):
        return None
    r = CheckResult()
    try:
        part = degree_partition(f.g, f.k)
    except ValueError as exc:
        r.expect(False, str(exc))
        return r
    except StructuralViolation as exc:
        r.expect(False, f"dichotomy: {exc}")
        return r
    r.applicable = part.G2.m > 0
    r.expect(not part.unclassified, f"unclassified edges in G2: {[list(e) for e in part.unclassified]}")
    r.expect(part.type1_is_forest, f"type-1 edges {[list(e) for e in part.E1]} contain a cycle")
    r.expect(part.counting_inequality_holds,
             f"counting inequality fails: {part.count_lhs} > {part.count_rhs}")
    return r


CHECKS = {
    "thm_conn": check_thm_conn,
    "lemma_min_fc": check_lemma_min_fc,
    "thm_min_degree": check_thm_min_degree,
    "thm_degree_count": check_thm_degree_count,
    "witness_biconditional": check_witness_biconditional,
    "structural_props": check_structural_props,
    "forest_claim": check_forest_claim,
}


def run_check(g: Graph, k: int, check: str) -> CheckResult | None:
    """Evaluate one check on one graph (None when its hypothesis fails or
    the pair is inadmissible).  Used to replay violation records."""
    if not 1 <= k < g.n or (g.n - k) % 2:
        return None
    return CHECKS[check](Facts(g, k))


# -------------------------------------------------------------------- report

@dataclass
class CheckTally:
    hypothesis_matched: int = 0
    assertions_checked: int = 0
    violations: int = 0
    applicable_instances: int = 0
    samples: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def merge(self, other: CheckTally, sample_limit: int) -> None:
        self.hypothesis_matched += other.hypothesis_matched
        self.assertions_checked += other.assertions_checked
        self.violations += other.violations
        self.applicable_instances += other.applicable_instances
        room = sample_limit - len(self.samples)
        if room > 0:
            self.samples.extend(other.samples[:room])
        for key, val in other.notes.items():
            self.notes[key] = self.notes.get(key, 0) + val


@dataclass
class VerificationReport:
    config: dict
    graphs_scanned: int = 0
    graphs_matching_filters: int = 0
    pairs_admitted: int = 0
    pairs_matching_filters: int = 0
    parity_skipped: int = 0
    range_skipped: int = 0
    parse_errors: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    stopped_early: bool = False
    wall_time_s: float = 0.0

    @property
    def violation_count(self) -> int:
        return len(self.violations)

    @property
    def assertions_checked(self) -> int:
        return sum(t.assertions_checked for t in self.checks.values())

    def merge(self, other: VerificationReport, sample_limit: int) -> None:
        for name in ("graphs_scanned", "graphs_matching_filters", "pairs_admitted",
                     "pairs_matching_filters", "parity_skipped", "range_skipped"):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        self.parse_errors.extend(other.parse_errors)
        self.violations.extend(other.violations)
        for name, tally in other.checks.items():
            self.checks.setdefault(name, CheckTally()).merge(tally, sample_limit)
        self.stopped_early = self.stopped_early or other.stopped_early

    def check_status(self, name: str) -> str:
        t = self.checks[name]
        if t.violations:
            return "violations"
        if name in STRUCTURAL_CHECKS and t.applicable_instances == 0:
            return "no_applicable_instance"
        if t.hypothesis_matched == 0:
            return "no_matching_graph"
        return "passed"

    def to_dict(self, include_timing: bool = True) -> dict:
        checks = {}
        for name, t in self.checks.items():
            entry = asdict(t)
            entry["status"] = self.check_status(name)
            checks[name] = entry
        out = {
            "config": self.config,
            "graphs_scanned": self.graphs_scanned,
            "graphs_matching_filters": self.graphs_matching_filters,
            "pairs_admitted": self.pairs_admitted,
            "pairs_matching_filters": self.pairs_matching_filters,
            "parity_skipped": self.parity_skipped,
            "range_skipped": self.range_skipped,
            "assertions_checked": self.assertions_checked,
            "parse_errors": self.parse_errors,
            "checks": checks,
            "violation_count": self.violation_count,
            "violations": self.violations,
            "stopped_early": self.stopped_early,
        }
        if include_timing:
            out["wall_time_s"] = round(self.wall_time_s, 3)
        return out

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True)

    def summary(self) -> str:
        lines = [
            f"graphs scanned: {self.graphs_scanned}",
            f"graphs matching filters: {self.graphs_matching_filters}",
            f"(graph, k) pairs: {self.pairs_admitted} admitted, "
            f"{self.parity_skipped} parity-skipped, {self.range_skipped} out of range",
        ]
        for name, t in self.checks.items():
            status = self.check_status(name)
            label = {
                "no_applicable_instance": "no applicable instance found",
                "no_matching_graph": "no graph met the hypothesis",
            }.get(status, status)
            lines.append(
                f"  {name}: {t.hypothesis_matched} graphs, {t.assertions_checked} assertions, "
                f"{t.violations} violations [{label}]"
            )
        if self.parse_errors:
            lines.append(f"parse errors: {len(self.parse_errors)}")
        lines.append(f"violations: {self.violation_count}")
        return "\n".join(lines)

    def exit_code(self) -> int:
        if self.violations:
            return 1
        if self.parse_errors:
            return 3
        return 0


# ------------------------------------------------------------------- running

def _empty_report(cfg: StreamConfig) -> VerificationReport:
    rep = VerificationReport(config=cfg.echo())
    for name in cfg.checks:
        rep.checks[name] = CheckTally()
    return rep


def _scan(items, cfg: StreamConfig) -> VerificationReport:
    """Scan (label, Graph | Graph6Error, graph6 text or None) items."""
    rep = _empty_report(cfg)
    selected = [(name, CHECKS[name]) for name in cfg.checks]
    for label, g, text in items:
        if isinstance(g, Graph6Error):
            rep.parse_errors.append({"line": label, "text": text, "error": str(g)})
            continue
        rep.graphs_scanned += 1
        matched_any = False
        for k in cfg.k_values:
            if not 1 <= k < g.n:
                rep.range_skipped += 1
                continue
            if (g.n - k) % 2:
                rep.parity_skipped += 1
                continue
            rep.pairs_admitted += 1
            facts = Facts(g, k)
            if not all(facts.passes(f) for f in cfg.filters):
                continue
            rep.pairs_matching_filters += 1
            matched_any = True
            for name, check in selected:
                result = check(facts)
                if result is None:
                    continue
                tally = rep.checks[name]
                tally.hypothesis_matched += 1
                tally.assertions_checked += result.assertions
                tally.applicable_instances += int(result.applicable)
                for key, val in result.notes.items():
                    tally.notes[key] = tally.notes.get(key, 0) + val
                g6 = None
                if len(tally.samples) < cfg.sample_limit:
                    g6 = text or write_graph6(g).decode()
                    tally.samples.append(g6)
                for detail in result.failures:
                    tally.violations += 1
                    g6 = g6 or text or write_graph6(g).decode()
                    rep.violations.append({"graph6": g6, "k": k, "check": name, "detail": detail})
                if result.failures and cfg.fail_fast:
                    rep.graphs_matching_filters += 1
                    rep.stopped_early = True
                    return rep
        rep.graphs_matching_filters += int(matched_any)
    return rep


def _generated(n: int, lo: int, hi: int):
    pairs = _pairs(n)
    for mask in range(lo, hi):
        yield f"n={n}#{mask}", Graph(n, adjacency_from_mask(n, mask, pairs), check=False), None


def _parsed(lines):
    for number, raw in lines:
        text = raw.strip()
        try:
            yield number, parse_graph6(text), text
        except Graph6Error as exc:
            yield number, exc, text


def _run_shard(shard, cfg: StreamConfig) -> VerificationReport:
    kind, payload = shard
    if kind == "generate":
        return _scan(_generated(*payload), cfg)
    return _scan(_parsed(payload), cfg)


def _read_lines(cfg: StreamConfig) -> list[tuple[int, str]]:
    if cfg.lines is not None:
        raw = list(cfg.lines)
    elif cfg.input == "-":
        raw = sys.stdin.read().splitlines()
    else:
        try:
            with open(cfg.input, "rb") as fh:
                raw = [line.decode("ascii", "replace") for line in fh.read().splitlines()]
        except OSError as exc:
            raise ConfigError(f"cannot read {cfg.input}: {exc}") from exc
    return [(i, line) for i, line in enumerate(raw, 1) if line.strip()]


def _shards(cfg: StreamConfig, chunk: int):
    if cfg.generate is not None:
        for n in range(cfg.min_n, cfg.generate + 1):
            total = 1 << (n * (n - 1) // 2)
            for lo in range(0, total, chunk):
                yield "generate", (n, lo, min(lo + chunk, total))
    else:
        lines = _read_lines(cfg)
        for lo in range(0, len(lines), chunk):
            yield "lines", lines[lo:lo + chunk]


def verify_stream(cfg: StreamConfig, chunk: int = 1 << 15) -> VerificationReport:
    """Run every selected check over the stream and aggregate a report.

    Shards are merged in input order, so the report (apart from timing) does
    not depend on ``cfg.workers``.
    """
    cfg.validate()
    start = time.perf_counter()
    report = _empty_report(cfg)
    shards = _shards(cfg, chunk)
    if cfg.workers == 1:
        partials = (_run_shard(s, cfg) for s in shards)
    else:
        pool = ProcessPoolExecutor(max_workers=cfg.workers)
        partials = pool.map(_run_shard, shards, repeat(cfg))
    try:
        for part in partials:
            report.merge(part, cfg.sample_limit)
            if cfg.fail_fast and part.stopped_early:
                break
    finally:
        if cfg.workers != 1:
            pool.shutdown(cancel_futures=True)
    report.wall_time_s = time.perf_counter() - start
    return report


def replay_violation(record: dict) -> CheckResult | None:
    """Re-run the check named in a violation record on its graph alone."""
    return run_check(parse_graph6(record["graph6"]), record["k"], record["check"])
