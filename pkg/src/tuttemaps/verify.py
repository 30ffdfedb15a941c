"""Exhaustive verification of every counting identity on a single map.

Each check returns a list of failure witnesses (empty when it passes).
Checks also declare which library operations they exercise so a corpus
run can report operation coverage.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
import time

from . import bijection as bij
from . import orientation as ori
from . import sandpile as sp
from . import trees as tr
from .enumeration import (
    bits,
    enumerate_forests,
    enumerate_orientations,
    enumerate_spanning_trees,
    enumerate_subgraphs,
    is_connected_subgraph,
    is_forest,
    n_components,
)
from .literals import subgraph_str
from .mapfile import parse_map, serialize_map
from .maps import dual_map, euler_characteristic, perm_cycles, underlying_graph

ALL_OPS = (
    "build_map", "underlying_graph", "dual_map", "euler_characteristic", "parse_map",
    "motion_function", "gt_order", "fundamental_cycle", "fundamental_cocycle", "activities",
    "external_active_iff_ancestor", "postfix_order", "tutte_polynomial",
    "tutte_subgraph_oracle", "forest_expansion", "delta", "tree_interval",
    "outdegree_sequence", "excess", "is_outdegree_sequence", "reachable", "classify",
    "enumerate_directed_cycles", "enumerate_directed_cocycles", "flip", "disagreement_cycle",
    "phi_tree", "construct_tree", "phi", "psi", "is_minimal", "gamma", "gamma_inverse",
    "specialization_census", "root_components", "root_strong_components", "is_bipolar",
    "topple", "is_recurrent", "level", "lambda", "upsilon", "sandpile_to_outdegree",
    "enumerate_subgraphs", "enumerate_orientations", "enumerate_spanning_trees",
)

CHECKS = []


def check(name, ops):
    def deco(fn):
        CHECKS.append((name, tuple(ops), fn))
        return fn
    return deco


@dataclass
class CheckRecord:
    map: str
    check: str
    status: str        # "pass", "fail" or "skip"
    witness: str = ""
    seconds: float = 0.0

    def as_dict(self):
        return {"map": self.map, "check": self.check, "status": self.status, "witness": self.witness}


@dataclass
class VerificationReport:
    records: list = field(default_factory=list)
    coverage: Counter = field(default_factory=Counter)
    census: dict = field(default_factory=dict)   # map name -> Census
    seed: int | None = None

    @property
    def ok(self):
        return all(r.status != "fail" for r in self.records)

    def failures(self):
        return [r for r in self.records if r.status == "fail"]

    def uncovered(self):
        return [op for op in ALL_OPS if not self.coverage[op]]

    def merge(self, other):
        self.records += other.records
        self.coverage.update(other.coverage)
        self.census.update(other.census)


def _fmt_s(m, mask):
    return "{" + subgraph_str(m, mask) + "}"


# -- map_core -------------------------------------------------------------------


@check("map_invariants", ["build_map", "parse_map", "underlying_graph", "dual_map", "euler_characteristic"])
def _map_invariants(m):
    bad = []
    cover = sorted(h for c in perm_cycles(m.sigma) for h in c)
    if cover != list(range(m.n_half)):
        bad.append("sigma cycles do not partition H")
    if any(m.alpha[h] == h or m.alpha[m.alpha[h]] != h for h in range(m.n_half)):
        bad.append("alpha is not a fixed-point-free involution")
    if parse_map(serialize_map(m)) != m:
        bad.append("serialize/parse round-trip changed the map")
    if not underlying_graph(m).is_connected():
        bad.append("underlying graph is disconnected")
    d = dual_map(m)
    if dual_map(d) != m:
        bad.append("dual is not an involution")
    if euler_characteristic(d) != euler_characteristic(m):
        bad.append("dual changes the Euler characteristic")
    return bad


# -- tree_activity ----------------------------------------------------------------


@check("tutte_expansions", ["tutte_polynomial", "tutte_subgraph_oracle", "forest_expansion",
                            "enumerate_subgraphs", "enumerate_spanning_trees"])
def _tutte(m):
    t = tr.tutte_polynomial(m)
    s = tr.tutte_subgraph_oracle(m)
    f = tr.forest_expansion(m)
    bad = []
    if not (t == s == f):
        bad.append(f"tree={t} subgraph={s} forest={f}")
    if not t.is_nonnegative():
        bad.append(f"negative coefficient in {t}")
    if t(1, 1) != sum(1 for _ in enumerate_spanning_trees(m)):
        bad.append("T(1,1) differs from the number of spanning trees")
    if t(2, 2) != 2 ** m.n_edges:
        bad.append("T(2,2) differs from 2^|E|")
    return bad


@check("root_independence", ["tutte_polynomial"])
def _root_independence(m):
    t = tr.tutte_polynomial(m)
    bad = []
    for h in range(m.n_half):
        other = tr.tutte_polynomial(m.with_root(h))
        if other != t:
            bad.append(f"root {m.tokens[h]} gives {other}")
    return bad


@check("tours_and_activities", ["motion_function", "gt_order", "fundamental_cycle", "fundamental_cocycle",
                                "activities", "external_active_iff_ancestor", "postfix_order",
                                "phi_tree", "construct_tree", "phi"])
def _tours(m):
    bad = []
    for T in enumerate_spanning_trees(m):
        t = tr.motion_function(m, T)
        if len(perm_cycles(t)) != 1:
            bad.append(f"tour of {_fmt_s(m, T)} is not one cycle")
            continue
        order = tr.gt_order(m, T)
        if order[0] != m.root or any(t[order[i]] != order[(i + 1) % m.n_half] for i in range(m.n_half)):
            bad.append(f"order of {_fmt_s(m, T)} does not follow the tour")
        acts = tr.activities(m, T)
        o_t = bij.phi_tree(m, T)
        cyc = set(ori.enumerate_directed_cycles(m, o_t))
        coc = set(ori.enumerate_directed_cocycles(m, o_t))
        for e in range(m.n_edges):
            if T >> e & 1:
                D = tr.fundamental_cocycle(m, T, e)
                active = bool(acts.internal_active >> e & 1)
                if (D in coc) != active:
                    bad.append(f"cocycle of {m.edge_names[e]} in {_fmt_s(m, T)}: directed={D in coc}, active={active}")
            else:
                C = tr.fundamental_cycle(m, T, e)
                active = bool(acts.external_active >> e & 1)
                if tr.external_active_iff_ancestor(m, T, e) != active:
                    bad.append(f"ancestor test disagrees on {m.edge_names[e]} in {_fmt_s(m, T)}")
                if (C in cyc) != active:
                    bad.append(f"cycle of {m.edge_names[e]} in {_fmt_s(m, T)}: directed={C in cyc}, active={active}")
        post = tr.postfix_order(m, T)
        if post[-1] != m.root_vertex or sorted(post) != list(range(m.n_vertices)):
            bad.append(f"postfix order of {_fmt_s(m, T)} malformed")
        if tr.delta(m, T) != T:
            bad.append(f"delta({_fmt_s(m, T)}) is not the tree itself")
        if bij.construct_tree(m, o_t) != T:
            bad.append(f"construct_tree(phi_tree({_fmt_s(m, T)})) differs")
        if bij.phi(m, T) != o_t:
            bad.append(f"phi and phi_tree disagree on {_fmt_s(m, T)}")
        if not ori.is_v0_connected(m, o_t):
            bad.append(f"O_T of {_fmt_s(m, T)} is not v0-connected")
    return bad


@check("interval_partition", ["tree_interval", "delta"])
def _partition(m):
    bad = []
    owner = {}
    for T in enumerate_spanning_trees(m):
        iv = tr.tree_interval(m, T)
        members = list(iv.members())
        a = tr.activities(m, T)
        if len(set(members)) != 2 ** (a.internal + a.external) or len(iv) != len(members):
            bad.append(f"interval of {_fmt_s(m, T)} has the wrong size")
        for S in members:
            if S in owner:
                bad.append(f"{_fmt_s(m, S)} lies in the intervals of two trees")
            owner[S] = T
            if tr.delta(m, S) != T:
                bad.append(f"delta({_fmt_s(m, S)}) is not {_fmt_s(m, T)}")
            c = n_components(m, S)
            if c - 1 != (T & ~S).bit_count() or S.bit_count() + c - m.n_vertices != (S & ~T).bit_count():
                bad.append(f"component counts of {_fmt_s(m, S)} break the interval identity")
            if is_connected_subgraph(m, S) != (S & T == T):
                bad.append(f"{_fmt_s(m, S)}: connectivity differs from containing the tree")
            if is_forest(m, S) != (S | T == T):
                bad.append(f"{_fmt_s(m, S)}: being a forest differs from lying under the tree")
    if len(owner) != 1 << m.n_edges:
        bad.append(f"intervals cover {len(owner)} of {1 << m.n_edges} subgraphs")
    return bad


# -- orientation -----------------------------------------------------------------


@check("minty_dichotomy", ["enumerate_directed_cycles", "enumerate_directed_cocycles", "enumerate_orientations"])
def _minty(m):
    bad = []
    for o in enumerate_orientations(m):
        cyc = ori.enumerate_directed_cycles(m, o)
        coc = ori.enumerate_directed_cocycles(m, o)
        in_c = 0
        for C in cyc:
            in_c |= C
        in_d = 0
        for D in coc:
            in_d |= D
        if in_c & in_d or (in_c | in_d) != m.all_edges:
            bad.append(f"orientation {ori.orientation_str(m, o)} breaks the cycle/cocycle dichotomy")
    return bad


@check("reachability", ["reachable", "classify", "outdegree_sequence", "excess"])
def _reach(m):
    bad = []
    for o in enumerate_orientations(m):
        delta = ori.outdegree_sequence(m, o)
        if ori.excess(m, delta, range(m.n_vertices)) != 0 or ori.excess(m, delta, []) != 0:
            bad.append(f"excess of V or of the empty set is not 0 for {ori.orientation_str(m, o)}")
        for u in range(m.n_vertices):
            for v in range(m.n_vertices):
                if ori.reachable(m, o, u, v) != ori.reachable_by_excess(m, o, u, v):
                    bad.append(f"reachability {u}->{v} disagrees for {ori.orientation_str(m, o)}")
        c = ori.classify(m, o)
        mutual = all(ori.reachable(m, o, u, v) for u in range(m.n_vertices) for v in range(m.n_vertices))
        if c.strongly_connected != mutual or c.strongly_connected != (not ori.enumerate_directed_cocycles(m, o)):
            bad.append(f"strong connectivity tests disagree for {ori.orientation_str(m, o)}")
        if c.acyclic and c.strongly_connected:
            bad.append(f"{ori.orientation_str(m, o)} is both acyclic and strongly connected")
        if c.v0_connected != ori.is_v0_connected_seq(m, delta):
            bad.append(f"v0-connectivity differs from its outdegree criterion for {ori.orientation_str(m, o)}")
        if c.strongly_connected != ori.is_strongly_connected_seq(m, delta):
            bad.append(f"strong connectivity differs from its outdegree criterion for {ori.orientation_str(m, o)}")
    return bad


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@check("outdegree_sequences", ["is_outdegree_sequence"])
def _outdeg(m):
    realised = {ori.outdegree_sequence(m, o) for o in enumerate_orientations(m)}
    bad = []
    for delta in _compositions(m.n_edges, m.n_vertices):
        if ori.is_outdegree_sequence(m, delta) != (delta in realised):
            bad.append(f"delta {delta}: criterion says {not delta in realised}")
    return bad


@check("flips", ["flip", "disagreement_cycle", "classify"])
def _flips(m):
    bad = []
    by_delta = {}
    for o in enumerate_orientations(m):
        by_delta.setdefault(ori.outdegree_sequence(m, o), []).append(o)
        delta = ori.outdegree_sequence(m, o)
        cls = ori.classify(m, o)
        cyc_part = 0
        for C in ori.enumerate_directed_cycles(m, o):
            cyc_part |= C
        for C in ori.enumerate_directed_cycles(m, o):
            o2 = ori.flip(m, o, C)
            if ori.outdegree_sequence(m, o2) != delta or ori.flip(m, o2, C) != o:
                bad.append(f"cycle flip misbehaves on {ori.orientation_str(m, o)}")
            c2 = ori.classify(m, o2)
            if (c2.acyclic, c2.strongly_connected, c2.v0_connected) != (cls.acyclic, cls.strongly_connected, cls.v0_connected):
                bad.append(f"cycle flip changed the class of {ori.orientation_str(m, o)}")
        for D in ori.enumerate_directed_cocycles(m, o):
            if ori.flip(m, ori.flip(m, o, D), D) != o:
                bad.append(f"double cocycle flip is not the identity on {ori.orientation_str(m, o)}")
    for group in by_delta.values():
        for o in group:
            for target in group:
                cur = o
                K = cur.bits ^ target.bits
                while K:
                    e = bits(K)[0]
                    C = ori.disagreement_cycle(m, cur, target, e)
                    if C & ~K or not C >> e & 1 or C not in ori.enumerate_directed_cycles(m, cur):
                        bad.append(f"disagreement cycle escapes K for {ori.orientation_str(m, cur)}")
                        break
                    cur = ori.flip(m, cur, C)
                    newK = cur.bits ^ target.bits
                    if newK.bit_count() >= K.bit_count():
                        bad.append("cycle flip did not shrink the disagreement set")
                        break
                    K = newK
    return bad


# -- bijection -------------------------------------------------------------------


@check("phi_psi_roundtrip", ["phi", "psi"])
def _roundtrip(m):
    bad = []
    images = set()
    for S in enumerate_subgraphs(m):
        o = bij.phi(m, S)
        images.add(o)
        if bij.psi(m, o) != S:
            bad.append(f"psi(phi({_fmt_s(m, S)})) = {_fmt_s(m, bij.psi(m, o))}")
    if len(images) != 1 << m.n_edges:
        bad.append("phi is not injective")
    for o in enumerate_orientations(m):
        if bij.phi(m, bij.psi(m, o)) != o:
            bad.append(f"phi(psi({ori.orientation_str(m, o)})) differs")
    return bad


@check("census", ["specialization_census", "is_minimal"])
def _census(m, report=None):
    c = bij.specialization_census(m)
    if report is not None:
        report.census[report._current] = c
    bad = []
    if c.subgraphs != c.tutte:
        bad.append(f"subgraph table {c.subgraphs} != Tutte table {c.tutte}")
    if c.orientations != c.tutte:
        bad.append(f"orientation table {c.orientations} != Tutte table {c.tutte}")
    for S, row, col in c.mismatches[:5]:
        bad.append(f"phi breaks class {row or col} at {_fmt_s(m, S)}")
    for o in enumerate_orientations(m):
        run = bij.psi_run(m, o)
        if bij.is_minimal(m, o) != (run.first_a is None):
            bad.append(f"minimality tests disagree on {ori.orientation_str(m, o)}")
    return bad


@check("unique_minimal", ["is_minimal", "gamma", "gamma_inverse"])
def _minimal(m):
    bad = []
    minimal_count = Counter()
    all_deltas = set()
    for o in enumerate_orientations(m):
        d = ori.outdegree_sequence(m, o)
        all_deltas.add(d)
        if bij.is_minimal(m, o):
            minimal_count[d] += 1
    for d in sorted(all_deltas):
        if minimal_count[d] != 1:
            bad.append(f"delta {d} has {minimal_count[d]} minimal orientations")
        else:
            o = bij.minimal_orientation(m, d)
            if not bij.is_minimal(m, o) or ori.outdegree_sequence(m, o) != d:
                bad.append(f"flip search for delta {d} missed the minimal orientation")
    images = {}
    for F in enumerate_forests(m):
        d = bij.gamma(m, F)
        images[F] = d
        if bij.gamma_inverse(m, d) != F:
            bad.append(f"gamma_inverse(gamma({_fmt_s(m, F)})) differs")
    if set(images.values()) != all_deltas or len(set(images.values())) != len(images):
        bad.append("gamma is not a bijection onto outdegree sequences")
    trees = set(enumerate_spanning_trees(m))
    v0c = {d for d in all_deltas if ori.is_v0_connected_seq(m, d)}
    strong = {d for d in all_deltas if ori.is_strongly_connected_seq(m, d)}
    if {images[T] for T in trees} != v0c:
        bad.append("spanning trees do not map onto v0-connected sequences")
    ext = {T for T in trees if tr.activities(m, T).internal == 0}
    if {images[T] for T in ext} != strong:
        bad.append("external trees do not map onto strongly connected sequences")
    return bad


@check("refinements", ["root_components", "root_strong_components", "is_bipolar"])
def _refinements(m):
    bad = []
    t = tr.tutte_polynomial(m)
    rc, rsc, bip = bij.orientation_histograms(m)

    def trim(v):
        v = list(v)
        while v and v[-1] == 0:
            v.pop()
        return v

    for j, name in zip((2, 1, 0), bij.ROWS_ORI):
        if trim(rc[name]) != trim(t.shifted_in_x(j)):
            bad.append(f"root-components over {name}: {rc[name]} vs T(1+x,{j}) = {t.shifted_in_x(j)}")
        if trim(rsc[name]) != trim(t.in_x(j)):
            bad.append(f"root-strong-components over {name}: {rsc[name]} vs T(x,{j}) = {t.in_x(j)}")
    expected = t.in_x(0)[1] if len(t.in_x(0)) > 1 else 0
    if bip != expected:
        bad.append(f"{bip} bipolar orientations, expected {expected}")
    for o in enumerate_orientations(m):
        p = bij.root_components(m, o)
        if len(p) - 1 != len(bij.head_min_cocycle_minima(m, o)) or set(p.links) != bij.head_min_cocycle_minima(m, o):
            bad.append(f"root-component links differ from head-min cocycle minima on {ori.orientation_str(m, o)}")
        if ori.is_v0_connected(m, o):
            q = bij.root_strong_components(m, o)
            if set(q.links) != bij.cocycle_minima(m, o) or len(q) - 1 != len(q.links):
                bad.append(f"root-strong links differ from cocycle minima on {ori.orientation_str(m, o)}")
    return bad


@check("duality", ["dual_map", "phi"])
def _duality(m):
    if euler_characteristic(m) != 0:
        return None
    d = dual_map(m)
    bad = []
    for S in enumerate_subgraphs(m):
        lhs = ori.reverse_all(m, bij.phi(m, S))
        rhs = bij.phi(d, m.all_edges & ~S)
        if lhs != rhs:
            bad.append(f"duality fails at {_fmt_s(m, S)}")
    return bad


# -- sandpile --------------------------------------------------------------------


@check("sandpile", ["topple", "is_recurrent", "level", "lambda", "upsilon", "sandpile_to_outdegree"])
def _sandpile(m):
    bad = []
    t = tr.tutte_polynomial(m)
    rec = sp.enumerate_recurrent(m)
    if len(rec) != t(1, 1):
        bad.append(f"{len(rec)} recurrent configurations, T(1,1) = {t(1, 1)}")
    hist = [0] * (t.y_degree() + 1)
    for c in rec:
        lv = sp.level(m, c)
        if lv < 0 or lv >= len(hist):
            bad.append(f"level {lv} out of range for {sp.config_str(m, c)}")
            continue
        hist[lv] += 1
    if hist != t.in_y(1):
        bad.append(f"level histogram {hist} vs T(1,y) {t.in_y(1)}")
    images = set()
    for T in enumerate_spanning_trees(m):
        c = sp.lambda_(m, T)
        images.add(c)
        if not sp.is_recurrent(m, c):
            bad.append(f"lambda({_fmt_s(m, T)}) is not recurrent")
            continue
        if sp.level(m, c) != tr.activities(m, T).external:
            bad.append(f"level of lambda({_fmt_s(m, T)}) differs from its external activity")
        if sp.upsilon(m, c) != T:
            bad.append(f"upsilon(lambda({_fmt_s(m, T)})) differs")
    if images != set(rec):
        bad.append("lambda is not onto the recurrent configurations")
    v0c = set()
    for c in rec:
        if sp.lambda_(m, sp.upsilon(m, c)) != c:
            bad.append(f"lambda(upsilon({sp.config_str(m, c)})) differs")
        d = sp.sandpile_to_outdegree(m, c)
        v0c.add(d)
        if (sp.level(m, c) == 0) != (d == c):
            bad.append(f"level-0 fixed point property fails at {sp.config_str(m, c)}")
    if len(v0c) != len(rec) or not all(ori.is_v0_connected_seq(m, d) for d in v0c):
        bad.append("sandpile_to_outdegree is not a bijection onto v0-connected sequences")
    if m.n_vertices <= 5:
        ranges = [range(m.degree[v] + 1) for v in range(m.n_vertices)]
        for c in product(*ranges):
            if sp.is_recurrent(m, c) != sp.is_recurrent_bruteforce(m, c):
                bad.append(f"greedy and exhaustive recurrence disagree on {sp.config_str(m, c)}")
    return bad


# -- driver ------------------------------------------------------------------------


def verify_all(m, name="map", only=None) -> VerificationReport:
    """Run every check on ``m``; failures become report entries."""
    report = VerificationReport()
    report._current = name
    for check_name, ops, fn in CHECKS:
        if only is not None and check_name not in only:
            continue
        start = time.perf_counter()
        try:
            result = fn(m, report) if check_name == "census" else fn(m)
        except Exception as exc:  # a crash is a failed check, not a crashed run
            result = [f"{type(exc).__name__}: {exc}"]
        elapsed = time.perf_counter() - start
        if result is None:
            report.records.append(CheckRecord(name, check_name, "skip", "not planar", elapsed))
            continue
        report.coverage.update(ops)
        status = "fail" if result else "pass"
        witness = "; ".join(result[:3]) + (f" (+{len(result) - 3} more)" if len(result) > 3 else "")
        report.records.append(CheckRecord(name, check_name, status, witness, elapsed))
    return report


def verify_corpus(maps, seed=None, only=None) -> VerificationReport:
    report = VerificationReport(seed=seed)
    for name, m in maps:
        report.merge(verify_all(m, name, only))
    return report
