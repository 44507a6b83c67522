"""Batch verification over graph corpora, random-graph surveys and hunts.

``check_all`` evaluates every applicable claim about one graph and returns a
record of values and verdicts; a corpus sweep with zero "violated" verdicts
is the library's regression gate.  Verdicts test hypotheses before
conclusions, so inapplicable claims report "not_applicable" rather than
passing silently, and graphs beyond the exact-solver guard report "skipped".
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .graphs import (
    Graph,
    GraphConditionSet,
    _bits,
    complement,
    connected_labeled_graphs,
    diameter,
    is_connected,
    max_degree,
    random_gnp,
    tmc_identity_conditions,
    to_graph6,
    vertex_connectivity,
)
from .maxleaf import max_leaf_exact
from .solvers import (
    SolverRangeError,
    max_exact_n,
    mc_exact,
    mvc_exact,
    tmc_exact,
)

HOLDS = "holds"
VIOLATED = "violated"
NOT_APPLICABLE = "not_applicable"
SKIPPED = "skipped"

#: verdict keys produced by check_all, in report order
CHECK_KEYS = (
    "tmc_lower_bound",            # tmc >= m - n + 2 + l
    "identity_conditions",        # any of the five conditions => equality above
    "size_condition_tmc_gt_mvc",  # m >= 2n - d - 2 => tmc > mvc
    "degree_condition_tmc_gt_mvc",  # d = 2 and 2*max_degree >= n + 1 => tmc > mvc
    "sum_upper_bound",            # tmc <= mc + mvc
    "sum_equality_iff_complete",  # equality above holds exactly for complete graphs
    "tree_formula",               # trees: tmc = l + 1
    "wheel_formula",              # wheels of order >= 5: tmc = m + 1
    "multipartite_formula",       # complete multipartite: tmc = m + r - t
    "diameter2_size_bound",       # diameter-2 minimum size in terms of max degree
    "internal_vertex_audit",      # witness tree system: sum of q_i >= q(G)
)


def is_star(g: Graph) -> bool:
    """K_{1,n-1} detected by degree sequence (one hub, n-1 leaves)."""
    if g.n < 3:
        return g.n == 2 and g.m == 1
    degs = sorted(g.degrees())
    return degs[-1] == g.n - 1 and degs[:-1] == [1] * (g.n - 1)


def wheel_order(g: Graph) -> int | None:
    """Order of g when it is a wheel on >= 5 vertices, else None."""
    n = g.n
    if n < 5 or g.m != 2 * (n - 1):
        return None
    hubs = [v for v in range(n) if g.degree(v) == n - 1]
    if len(hubs) != 1:
        return None
    hub = hubs[0]
    rim = [v for v in range(n) if v != hub]
    if any(g.degree(v) != 3 for v in rim):
        return None
    # rim must induce a single cycle: 2-regular and connected
    rim_mask = ((1 << n) - 1) & ~(1 << hub)
    seen = 1 << rim[0]
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        nxt &= rim_mask & ~seen
        seen |= nxt
        frontier = nxt
    return n if seen == rim_mask else None


def multipartite_sizes(g: Graph) -> list[int] | None:
    """Class sizes (descending) when g is complete multipartite, else None.

    A graph is complete multipartite exactly when every component of its
    complement is a clique.
    """
    comp = complement(g)
    full = (1 << g.n) - 1
    todo = full
    sizes = []
    while todo:
        start = (todo & -todo).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= comp.adj[v]
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        members = _bits(seen)
        for v in members:
            if (comp.adj[v] & seen) != seen ^ (1 << v):
                return None
        sizes.append(len(members))
        todo &= ~seen
    return sorted(sizes, reverse=True)


def diameter2_size_bound(g: Graph) -> tuple[str, int | None]:
    """Diameter-2 minimum-size check: with (n+1)/2 <= max degree <= n-2 the
    edge count must reach a case bound selected by exact rational ranges."""
    n = g.n
    if n < 2 or not is_connected(g) or diameter(g) != 2:
        return NOT_APPLICABLE, None
    delta = max_degree(g)
    if not (Fraction(n + 1, 2) <= delta <= n - 2):
        return NOT_APPLICABLE, None
    if delta in (n - 2, n - 3):
        bound = n + delta - 2
    elif delta == n - 4:
        bound = 2 * n - 5
    elif Fraction(2 * n - 2, 3) <= delta <= n - 5:
        bound = 2 * n - 4
    elif Fraction(3 * n - 3, 5) <= delta < Fraction(2 * n - 2, 3):
        bound = 3 * n - delta - 6
    elif Fraction(5 * n - 3, 9) <= delta < Fraction(3 * n - 3, 5):
        bound = 5 * n - 4 * delta - 10
    elif Fraction(n + 1, 2) <= delta < Fraction(5 * n - 3, 9):
        bound = 4 * n - 2 * delta - 11
    else:  # printed ranges leave a gap at this (n, delta)
        return NOT_APPLICABLE, None
    return (HOLDS if g.m >= bound else VIOLATED), bound


@dataclass
class TheoremCheckRecord:
    graph6: str
    n: int
    m: int
    l: int | None
    diameter: int
    max_degree: int
    tmc: int | None
    mc: int | None
    mvc: int | None
    condition_flags: dict[str, bool] | None
    verdicts: dict[str, str]
    elapsed_ms: float

    def violated(self) -> list[str]:
        return [k for k, v in self.verdicts.items() if v == VIOLATED]

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "TheoremCheckRecord":
        return cls(**json.loads(text))


def _leaf_stats(g: Graph) -> tuple[int, int]:
    """(l, q) with the n = 1 convention l = 0, q = 1."""
    if g.n == 1:
        return 0, 1
    ml = max_leaf_exact(g)
    return ml.leaf_count, ml.internal_count


def check_all(g: Graph) -> TheoremCheckRecord:
    """Evaluate every applicable claim for one connected graph."""
    return check_all_detailed(g)[0]


def check_all_detailed(g: Graph):
    """As check_all, but also return the solver reports keyed by invariant
    so callers can audit the witnesses without re-solving."""
    if not is_connected(g):
        raise ValueError("disconnected")
    t0 = time.perf_counter()
    n, m = g.n, g.m
    d = diameter(g)
    delta = max_degree(g)
    verdicts: dict[str, str] = {}
    try:
        l, q = _leaf_stats(g)
        rep_tmc = tmc_exact(g)
        rep_mc = mc_exact(g)
        rep_mvc = mvc_exact(g)
    except SolverRangeError:
        verdicts = {k: SKIPPED for k in CHECK_KEYS}
        return TheoremCheckRecord(
            graph6=to_graph6(g), n=n, m=m, l=None, diameter=d, max_degree=delta,
            tmc=None, mc=None, mvc=None, condition_flags=None, verdicts=verdicts,
            elapsed_ms=(time.perf_counter() - t0) * 1000.0,
        ), {}
    tmc, mc, mvc = rep_tmc.value, rep_mc.value, rep_mvc.value
    identity = m - n + 2 + l

    verdicts["tmc_lower_bound"] = HOLDS if tmc >= identity else VIOLATED

    conditions: GraphConditionSet | None = None
    if n > 3:
        conditions = tmc_identity_conditions(g)
        if conditions.any_holds():
            verdicts["identity_conditions"] = HOLDS if tmc == identity else VIOLATED
        else:
            verdicts["identity_conditions"] = NOT_APPLICABLE
    else:
        verdicts["identity_conditions"] = NOT_APPLICABLE

    if n >= 2 and m >= 2 * n - d - 2:
        verdicts["size_condition_tmc_gt_mvc"] = HOLDS if tmc > mvc else VIOLATED
    else:
        verdicts["size_condition_tmc_gt_mvc"] = NOT_APPLICABLE

    if n >= 2 and d == 2 and 2 * delta >= n + 1:
        verdicts["degree_condition_tmc_gt_mvc"] = HOLDS if tmc > mvc else VIOLATED
    else:
        verdicts["degree_condition_tmc_gt_mvc"] = NOT_APPLICABLE

    verdicts["sum_upper_bound"] = HOLDS if tmc <= mc + mvc else VIOLATED
    complete = g.is_complete()
    verdicts["sum_equality_iff_complete"] = (
        HOLDS if (tmc == mc + mvc) == complete else VIOLATED
    )

    if m == n - 1 and n >= 2:
        verdicts["tree_formula"] = HOLDS if tmc == l + 1 else VIOLATED
    else:
        verdicts["tree_formula"] = NOT_APPLICABLE

    if wheel_order(g) is not None:
        verdicts["wheel_formula"] = HOLDS if tmc == m + 1 else VIOLATED
    else:
        verdicts["wheel_formula"] = NOT_APPLICABLE

    sizes = multipartite_sizes(g)
    if sizes is not None and len(sizes) >= 2:
        r = len(sizes)
        t = sum(1 for s in sizes if s >= 2)
        verdicts["multipartite_formula"] = HOLDS if tmc == m + r - t else VIOLATED
    else:
        verdicts["multipartite_formula"] = NOT_APPLICABLE

    verdicts["diameter2_size_bound"] = diameter2_size_bound(g)[0]

    if not complete and rep_tmc.witness_system is not None:
        audit_ok = rep_tmc.witness_system.total_internal >= q
        verdicts["internal_vertex_audit"] = HOLDS if audit_ok else VIOLATED
    else:
        verdicts["internal_vertex_audit"] = NOT_APPLICABLE

    record = TheoremCheckRecord(
        graph6=to_graph6(g), n=n, m=m, l=l, diameter=d, max_degree=delta,
        tmc=tmc, mc=mc, mvc=mvc,
        condition_flags=conditions.flags() if conditions is not None else None,
        verdicts=verdicts,
        elapsed_ms=(time.perf_counter() - t0) * 1000.0,
    )
    return record, {"tmc": rep_tmc, "mc": rep_mc, "mvc": rep_mvc}


def builtin_corpus(max_n: int) -> Iterator[Graph]:
    """All labeled connected graphs with 1 <= n <= max_n (max_n <= 6)."""
    if max_n > 6:
        raise ValueError(
            "builtin corpus is capped at n <= 6; supply an external graph6 list for larger n"
        )
    for n in range(1, max_n + 1):
        yield from connected_labeled_graphs(n)


def check_corpus(graphs: Iterable[Graph]) -> Iterator[TheoremCheckRecord]:
    for g in graphs:
        yield check_all(g)


# ---------------------------------------------------------------------------
# Random-graph survey
# ---------------------------------------------------------------------------

@dataclass
class SurveyRecord:
    """Deterministic G(n,p) survey of the identity tmc = m - n + 2 + l.

    A sample is *decided* when the identity is settled either by the
    complement-4-connected certificate or, within the exact-solver guard, by
    solving outright; fractions are over decided samples and the certificate
    coverage is reported separately.
    """

    n: int
    p: float
    trials: int
    seed: int
    connected_samples: int = 0
    disconnected_discarded: int = 0
    identity_confirmed: int = 0
    identity_refuted: int = 0
    identity_undecided: int = 0
    mc_identity_confirmed: int = 0
    mc_identity_refuted: int = 0
    mc_identity_undecided: int = 0
    complement_4_connected: int = 0
    fraction_identity: float = 0.0
    fraction_complement_4_connected: float = 0.0
    fraction_mc_identity: float = 0.0

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def survey_random(n: int, p: float, trials: int, seed: int) -> SurveyRecord:
    """Sample G(n,p) ``trials`` times (deterministic in ``seed``) and measure
    how often tmc = m - n + 2 + l and mc = m - n + 2 hold."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rec = SurveyRecord(n=n, p=p, trials=trials, seed=seed)
    limit = max_exact_n()
    for i in range(trials):
        g = random_gnp(n, p, seed=(seed * 1_000_003 + i))
        if not is_connected(g):
            rec.disconnected_discarded += 1
            continue
        rec.connected_samples += 1
        certified = vertex_connectivity(complement(g)) >= 4
        if certified:
            rec.complement_4_connected += 1
            rec.identity_confirmed += 1
            rec.mc_identity_confirmed += 1
        elif n <= limit:
            l, _ = _leaf_stats(g)
            if tmc_exact(g).value == g.m - g.n + 2 + l:
                rec.identity_confirmed += 1
            else:
                rec.identity_refuted += 1
            if mc_exact(g).value == g.m - g.n + 2:
                rec.mc_identity_confirmed += 1
            else:
                rec.mc_identity_refuted += 1
        else:
            rec.identity_undecided += 1
            rec.mc_identity_undecided += 1
    decided = rec.identity_confirmed + rec.identity_refuted
    rec.fraction_identity = rec.identity_confirmed / decided if decided else 0.0
    mc_decided = rec.mc_identity_confirmed + rec.mc_identity_refuted
    rec.fraction_mc_identity = rec.mc_identity_confirmed / mc_decided if mc_decided else 0.0
    if rec.connected_samples:
        rec.fraction_complement_4_connected = (
            rec.complement_4_connected / rec.connected_samples
        )
    return rec


# ---------------------------------------------------------------------------
# Hunts for open questions (reported, never asserted)
# ---------------------------------------------------------------------------

@dataclass
class Finding:
    graph6: str
    n: int
    m: int
    tmc: int
    other: int
    comparison: str

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def hunt_tmc_le_mvc(graphs: Iterable[Graph]) -> list[Finding]:
    """Non-star connected graphs on n >= 6 vertices with tmc <= mvc."""
    findings = []
    for g in graphs:
        if g.n < 6 or is_star(g) or not is_connected(g):
            continue
        tmc = tmc_exact(g).value
        mvc = mvc_exact(g).value
        if tmc <= mvc:
            findings.append(
                Finding(
                    graph6=to_graph6(g), n=g.n, m=g.m, tmc=tmc, other=mvc,
                    comparison="tmc<=mvc",
                )
            )
    return findings


def hunt_tmc_le_mc(graphs: Iterable[Graph]) -> list[Finding]:
    """Connected graphs with tmc <= mc (expected none)."""
    findings = []
    for g in graphs:
        if not is_connected(g):
            continue
        tmc = tmc_exact(g).value
        mc = mc_exact(g).value
        if tmc <= mc:
            findings.append(
                Finding(
                    graph6=to_graph6(g), n=g.n, m=g.m, tmc=tmc, other=mc,
                    comparison="tmc<=mc",
                )
            )
    return findings


HUNT_TARGETS = {
    "tmc_le_mvc": hunt_tmc_le_mvc,
    "tmc_le_mc": hunt_tmc_le_mc,
}


# ---------------------------------------------------------------------------
# Report serialization helpers
# ---------------------------------------------------------------------------

def records_to_csv(records: Iterable[TheoremCheckRecord]) -> str:
    records = list(records)
    out = io.StringIO()
    if not records:
        return ""
    flag_keys = sorted(
        {k for r in records if r.condition_flags for k in r.condition_flags}
    )
    fields = (
        ["graph6", "n", "m", "l", "diameter", "max_degree", "tmc", "mc", "mvc"]
        + [f"cond_{k}" for k in flag_keys]
        + [f"verdict_{k}" for k in CHECK_KEYS]
        + ["elapsed_ms"]
    )
    w = csv.DictWriter(out, fieldnames=fields)
    w.writeheader()
    for r in records:
        row: dict[str, object] = {
            "graph6": r.graph6, "n": r.n, "m": r.m, "l": r.l,
            "diameter": r.diameter, "max_degree": r.max_degree,
            "tmc": r.tmc, "mc": r.mc, "mvc": r.mvc,
            "elapsed_ms": f"{r.elapsed_ms:.3f}",
        }
        for k in flag_keys:
            row[f"cond_{k}"] = (r.condition_flags or {}).get(k, "")
        for k in CHECK_KEYS:
            row[f"verdict_{k}"] = r.verdicts.get(k, "")
        w.writerow(row)
    return out.getvalue()
