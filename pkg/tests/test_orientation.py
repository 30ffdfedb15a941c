from itertools import product

import pytest

import oracles
from conftest import E
from tuttemaps import (
    Orientation,
    build_map,
    classify,
    disagreement_cycle,
    enumerate_directed_cocycles,
    enumerate_directed_cycles,
    excess,
    flip,
    is_outdegree_sequence,
    outdegree_sequence,
    reachable,
)
from tuttemaps.corpus import corpus, named_map
from tuttemaps.enumeration import enumerate_orientations
from tuttemaps.errors import NotDirected, OutdegreeMismatch, SameOrientationOnEdge, SumMismatch
from tuttemaps.orientation import (
    from_tails,
    is_strongly_connected_seq,
    is_v0_connected_seq,
    reachable_by_excess,
    reverse_all,
)

CORPUS = corpus()


def tails(m, *toks):
    return from_tails(m, [m.half_edge(t) for t in toks])


@pytest.fixture
def cyclic(k3):
    return tails(k3, "a", "b", "c")


@pytest.fixture
def o_t(k3):
    return tails(k3, "a", "b", "c'")


def test_literal_layout(k3, cyclic):
    assert cyclic.arcs(k3) == [(0, 1), (1, 2), (2, 0)]
    assert reverse_all(k3, cyclic) == tails(k3, "a'", "b'", "c'")


def test_outdegree_examples(k3, cyclic, o_t, loop_map):
    assert outdegree_sequence(k3, o_t) == (2, 1, 0)
    assert outdegree_sequence(k3, cyclic) == (1, 1, 1)
    assert outdegree_sequence(k3, reverse_all(k3, cyclic)) == (1, 1, 1)
    for o in enumerate_orientations(loop_map):
        assert outdegree_sequence(loop_map, o) == (1,)


def test_excess_matches_cut_tails():
    # U = {u1, u2, u3} with delta 4, 2, 1 and four edges inside U
    tokens = []
    arcs = [("u1", "u2"), ("u1", "u2"), ("u2", "u3"), ("u3", "u1"),
            ("u1", "w"), ("u1", "w"), ("u2", "w"), ("w", "u3")]
    at = {v: [] for v in ("u1", "u2", "u3", "w")}
    pairs = []
    for i, (t, h) in enumerate(arcs):
        x, y = f"e{i}", f"e{i}'"
        tokens += [x, y]
        at[t].append(x)
        at[h].append(y)
        pairs.append([x, y])
    m = build_map(tokens, list(at.values()), pairs, "e0")
    o = from_tails(m, [m.half_edge(f"e{i}") for i in range(len(arcs))])
    d = outdegree_sequence(m, o)
    U = [m.vertex_of[m.half_edge(at[v][0])] for v in ("u1", "u2", "u3")]
    assert sorted(d[u] for u in U) == [1, 2, 4]
    assert excess(m, d, U) == (4 + 2 + 1) - 4 == 3
    crossing_tails = sum(1 for t, h in o.arcs(m) if t in U and h not in U)
    assert excess(m, d, U) == crossing_tails
    assert excess(m, d, range(m.n_vertices)) == 0
    assert excess(m, d, []) == 0


def test_sequence_examples(k3):
    assert is_outdegree_sequence(k3, (1, 1, 1))
    assert is_strongly_connected_seq(k3, (1, 1, 1))
    assert is_outdegree_sequence(k3, (2, 1, 0))
    assert is_v0_connected_seq(k3, (2, 1, 0))
    assert not is_strongly_connected_seq(k3, (2, 1, 0))
    assert excess(k3, (2, 1, 0), [2]) == 0
    assert not is_outdegree_sequence(k3, (3, 0, 0))
    assert excess(k3, (3, 0, 0), [1, 2]) == -1
    with pytest.raises(SumMismatch):
        is_outdegree_sequence(k3, (1, 1, 0))
    with pytest.raises(SumMismatch):
        is_outdegree_sequence(k3, (1, 2))


@pytest.mark.parametrize("name,m", CORPUS, ids=[n for n, _ in CORPUS])
def test_sequence_characterisation(name, m):
    realised = oracles.outdegree_sequences(m)
    for d in product(range(m.n_edges + 1), repeat=m.n_vertices):
        if sum(d) != m.n_edges:
            continue
        assert is_outdegree_sequence(m, d) == (d in realised)


def test_reachability_examples(k3, o_t):
    assert reachable(k3, o_t, 0, 2)
    assert not reachable(k3, o_t, 2, 0)
    assert not reachable_by_excess(k3, o_t, 2, 0)
    assert reachable(k3, o_t, 1, 1)


def test_reachability_agrees_with_excess():
    for _, m in CORPUS:
        for o in enumerate_orientations(m):
            for u in range(m.n_vertices):
                for v in range(m.n_vertices):
                    assert reachable(m, o, u, v) == reachable_by_excess(m, o, u, v)


def test_classify_examples(k3, cyclic, o_t):
    c = classify(k3, cyclic)
    assert c.strongly_connected and not c.acyclic
    c = classify(k3, o_t)
    assert c.acyclic and c.v0_connected and not c.strongly_connected


def test_not_both_acyclic_and_strong():
    for _, m in CORPUS:
        for o in enumerate_orientations(m):
            c = classify(m, o)
            assert not (c.acyclic and c.strongly_connected)
            assert c.acyclic == (not enumerate_directed_cycles(m, o))
            assert c.strongly_connected == (not enumerate_directed_cocycles(m, o))


def test_cycle_examples(k3, cyclic, o_t):
    assert enumerate_directed_cycles(k3, cyclic) == (k3.all_edges,)
    assert enumerate_directed_cycles(k3, o_t) == ()
    b2 = named_map("bundle2")
    anti = tails(b2, "a", "b'")
    assert b2.vertex_of[anti.tail(b2, 0)] != b2.vertex_of[anti.tail(b2, 1)]
    assert enumerate_directed_cycles(b2, anti) == (b2.all_edges,)


def test_cocycle_examples(k3, cyclic, o_t, edge_map):
    assert E(k3, "b", "c") in enumerate_directed_cocycles(k3, o_t)
    assert enumerate_directed_cocycles(k3, cyclic) == ()
    for o in enumerate_orientations(edge_map):
        assert enumerate_directed_cocycles(edge_map, o) == (1,)


@pytest.mark.parametrize("name,m", CORPUS, ids=[n for n, _ in CORPUS])
def test_cycles_and_cocycles_match_oracles(name, m):
    for o in enumerate_orientations(m):
        cyc = enumerate_directed_cycles(m, o)
        assert len(cyc) == len(set(cyc))
        assert set(cyc) == oracles.directed_cycles(m, o)
        assert set(enumerate_directed_cocycles(m, o)) == oracles.directed_cocycles(m, o)


def test_minty_dichotomy():
    for _, m in CORPUS:
        for o in enumerate_orientations(m):
            in_cyc = in_cocyc = 0
            for c in enumerate_directed_cycles(m, o):
                in_cyc |= c
            for c in enumerate_directed_cocycles(m, o):
                in_cocyc |= c
            assert in_cyc & in_cocyc == 0
            assert in_cyc | in_cocyc == m.all_edges


def test_flip_examples(k3, cyclic, o_t):
    rev = flip(k3, cyclic, k3.all_edges)
    assert rev == reverse_all(k3, cyclic)
    assert outdegree_sequence(k3, rev) == (1, 1, 1)
    assert flip(k3, rev, k3.all_edges) == cyclic
    cut = flip(k3, o_t, E(k3, "b", "c"))
    assert outdegree_sequence(k3, cut) == (1, 0, 2)
    with pytest.raises(NotDirected):
        flip(k3, o_t, E(k3, "a"))


def test_flips_preserve_classes():
    for _, m in CORPUS:
        for o in enumerate_orientations(m):
            c = classify(m, o)
            for cyc in enumerate_directed_cycles(m, o):
                o2 = flip(m, o, cyc)
                assert outdegree_sequence(m, o2) == outdegree_sequence(m, o)
                assert classify(m, o2) == c


def test_disagreement_examples(k3, cyclic, o_t):
    rev = reverse_all(k3, cyclic)
    for e in range(3):
        assert disagreement_cycle(k3, cyclic, rev, e) == k3.all_edges
    with pytest.raises(SameOrientationOnEdge):
        disagreement_cycle(k3, cyclic, cyclic, 0)
    with pytest.raises(OutdegreeMismatch):
        disagreement_cycle(k3, cyclic, o_t, 0)


def test_disagreement_cycle_connects_equal_sequences():
    for _, m in CORPUS:
        by_seq = {}
        for o in enumerate_orientations(m):
            by_seq.setdefault(outdegree_sequence(m, o), []).append(o)
        for group in by_seq.values():
            for o in group:
                for target in group:
                    cur = o
                    K = cur.bits ^ target.bits
                    while K:
                        e = (K & -K).bit_length() - 1
                        c = disagreement_cycle(m, cur, target, e)
                        assert c & ~K == 0 and c >> e & 1
                        assert c in enumerate_directed_cycles(m, cur)
                        cur = flip(m, cur, c)
                        newK = cur.bits ^ target.bits
                        assert newK.bit_count() < K.bit_count()
                        K = newK
                    assert cur == target


def test_orientation_is_value(k3):
    assert Orientation(3) == Orientation(3)
    assert len({Orientation(1), Orientation(1)}) == 1
