"""Acceptance criteria, one test each.

Every test prints a single ``PASS`` or ``FAIL`` line.  Run with
``pytest tests/test_acceptance.py -v`` or directly as a script.
"""

import sys
import time

from tuttemaps import (
    dual_map,
    forest_expansion,
    gamma,
    gamma_inverse,
    is_minimal,
    lambda_,
    level,
    outdegree_sequence,
    parse_map,
    phi,
    psi,
    sandpile_to_outdegree,
    specialization_census,
    tree_interval,
    tutte_polynomial,
    tutte_subgraph_oracle,
    upsilon,
)
from tuttemaps.bijection import orientation_histograms
from tuttemaps.corpus import NAMED, corpus
from tuttemaps.enumeration import enumerate_forests, enumerate_orientations, enumerate_spanning_trees, enumerate_subgraphs
from tuttemaps.maps import is_planar
from tuttemaps.orientation import reverse_all
from tuttemaps.sandpile import enumerate_recurrent
from tuttemaps.trees import activities

K3_TABLE = [[8, 4, 2], [7, 3, 1], [6, 2, 0]]


def fresh_corpus():
    maps = corpus(seed=42, count=50, max_halfedges=12)
    assert len(maps) == len(NAMED) - 1 + 50
    assert all(m.n_half <= 12 for _, m in maps)
    return maps


def report(capsys, number, title, failures, extra=""):
    ok = not failures
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}"
    if extra:
        line += f" ({extra})"
    if failures:
        line += f"; first failure: {failures[0]}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    assert ok, line


def trim(v):
    v = list(v)
    while v and v[-1] == 0:
        v.pop()
    return v


# -- 1 -----------------------------------------------------------------------------


def test_criterion_1_tutte_k3(capsys):
    start = time.perf_counter()
    failures = []
    base = NAMED["k3"]
    tokens = ["a", "a'", "b", "b'", "c", "c'"]
    for tok in tokens:
        m = parse_map(base.replace("root a", f"root {tok}"))
        got = str(tutte_polynomial(m))
        if got != "x^2 + x + y":
            failures.append(f"root {tok}: {got}")
    elapsed = time.perf_counter() - start
    if elapsed >= 1.0:
        failures.append(f"took {elapsed:.3f}s")
    report(capsys, 1, "Tutte polynomial of K3 is x^2 + x + y for all 6 roots", failures, f"{elapsed:.3f}s")


# -- 2 -----------------------------------------------------------------------------


def test_criterion_2_expansions(capsys):
    start = time.perf_counter()
    failures = []
    maps = fresh_corpus()
    for name, m in maps:
        t = tutte_polynomial(m)
        s = tutte_subgraph_oracle(m)
        f = forest_expansion(m)
        if not t == s == f:
            failures.append(f"{name}: tree {t}, subgraph {s}, forest {f}")
    elapsed = time.perf_counter() - start
    if elapsed >= 60.0:
        failures.append(f"took {elapsed:.1f}s")
    report(capsys, 2, f"tree, subgraph and forest expansions agree on {len(maps)} maps", failures, f"{elapsed:.2f}s")


# -- 3 -----------------------------------------------------------------------------


def test_criterion_3_round_trips(capsys):
    failures = []
    maps = fresh_corpus()
    for name, m in maps:
        for s in enumerate_subgraphs(m):
            if psi(m, phi(m, s)) != s:
                failures.append(f"{name}: psi(phi(S)) != S for S={s:b}")
        for o in enumerate_orientations(m):
            if phi(m, psi(m, o)) != o:
                failures.append(f"{name}: phi(psi(O)) != O for O={o.bits:b}")
    report(capsys, 3, f"psi.phi and phi.psi are identities on {len(maps)} maps", failures)


# -- 4 -----------------------------------------------------------------------------


def test_criterion_4_partition(capsys):
    failures = []
    maps = fresh_corpus()
    for name, m in maps:
        owner = {}
        for tree in enumerate_spanning_trees(m):
            iv = tree_interval(m, tree)
            act = activities(m, tree)
            members = set(iv.members())
            if len(members) != 1 << (act.internal + act.external):
                failures.append(f"{name}: interval of {tree:b} has {len(members)} members")
            for s in members:
                if s in owner:
                    failures.append(f"{name}: {s:b} in two intervals")
                owner[s] = tree
        if len(owner) != 1 << m.n_edges:
            failures.append(f"{name}: intervals cover {len(owner)} of {1 << m.n_edges} subgraphs")
    report(capsys, 4, "tree-intervals partition all subgraphs", failures)


# -- 5 -----------------------------------------------------------------------------


def test_criterion_5_census(capsys):
    failures = []
    maps = fresh_corpus()
    for name, m in maps:
        c = specialization_census(m)
        if not (c.subgraphs == c.orientations == c.tutte):
            failures.append(f"{name}: {c.subgraphs} / {c.orientations} / {c.tutte}")
        if name == "k3" and c.tutte != K3_TABLE:
            failures.append(f"k3 table {c.tutte}")
    report(capsys, 5, "3x3 census tables agree with Tutte evaluations", failures)


# -- 6 -----------------------------------------------------------------------------


def test_criterion_6_unique_minimal(capsys):
    failures = []
    maps = fresh_corpus()
    for name, m in maps:
        minimal = {}
        seqs = set()
        for o in enumerate_orientations(m):
            d = outdegree_sequence(m, o)
            seqs.add(d)
            if is_minimal(m, o):
                minimal[d] = minimal.get(d, 0) + 1
        for d in seqs:
            if minimal.get(d, 0) != 1:
                failures.append(f"{name}: {d} has {minimal.get(d, 0)} minimal orientations")
        for f in enumerate_forests(m):
            if gamma_inverse(m, gamma(m, f)) != f:
                failures.append(f"{name}: gamma round trip fails on {f:b}")
    report(capsys, 6, "one minimal orientation per outdegree sequence; gamma inverts", failures)


# -- 7 -----------------------------------------------------------------------------


def test_criterion_7_sandpile(capsys):
    failures = []
    maps = fresh_corpus()
    for name, m in maps:
        t = tutte_polynomial(m)
        rec = enumerate_recurrent(m)
        if len(rec) != t(1, 1):
            failures.append(f"{name}: {len(rec)} recurrent, T(1,1) = {t(1, 1)}")
        hist = [0] * (t.y_degree() + 1)
        for c in rec:
            hist[level(m, c)] += 1
        if hist != t.in_y(1):
            failures.append(f"{name}: levels {hist}, T(1,y) {t.in_y(1)}")
        if name == "k3" and hist != [2, 1]:
            failures.append(f"k3 levels {hist}")
        for tree in enumerate_spanning_trees(m):
            if upsilon(m, lambda_(m, tree)) != tree:
                failures.append(f"{name}: upsilon(lambda(T)) != T")
        for c in rec:
            if lambda_(m, upsilon(m, c)) != c:
                failures.append(f"{name}: lambda(upsilon(S)) != S for {c}")
            if level(m, c) == 0 and sandpile_to_outdegree(m, c) != c:
                failures.append(f"{name}: level-0 config {c} not fixed")
    report(capsys, 7, "sandpile counts, level histograms and inverse pair", failures)


# -- 8 -----------------------------------------------------------------------------


def test_criterion_8_refinements(capsys):
    failures = []
    maps = fresh_corpus()
    for name, m in maps:
        t = tutte_polynomial(m)
        rc, rsc, bip = orientation_histograms(m)
        for j, key in zip((2, 1, 0), ("any", "minimal", "acyclic")):
            if trim(rc[key]) != trim(t.shifted_in_x(j)):
                failures.append(f"{name}: root-components over {key} {rc[key]} vs T(1+x,{j})")
            if trim(rsc[key]) != trim(t.in_x(j)):
                failures.append(f"{name}: root-strong-components over {key} {rsc[key]} vs T(x,{j})")
        if bip != t[1, 0]:
            failures.append(f"{name}: {bip} bipolar orientations, [x]T(x,0) = {t[1, 0]}")
    report(capsys, 8, "root-component histograms and bipolar count", failures)


# -- 9 -----------------------------------------------------------------------------


def test_criterion_9_duality(capsys):
    failures = []
    planar = [(n, m) for n, m in fresh_corpus() if is_planar(m)]
    for name, m in planar:
        d = dual_map(m)
        for s in enumerate_subgraphs(m):
            if reverse_all(m, phi(m, s)) != phi(d, m.all_edges & ~s):
                failures.append(f"{name}: duality fails at {s:b}")
    report(capsys, 9, f"duality identity on {len(planar)} planar maps", failures)


if __name__ == "__main__":
    results = []
    for fn in (
        test_criterion_1_tutte_k3, test_criterion_2_expansions, test_criterion_3_round_trips,
        test_criterion_4_partition, test_criterion_5_census, test_criterion_6_unique_minimal,
        test_criterion_7_sandpile, test_criterion_8_refinements, test_criterion_9_duality,
    ):
        try:
            fn(None)
            results.append(True)
        except AssertionError:
            results.append(False)
    sys.exit(0 if all(results) else 1)
