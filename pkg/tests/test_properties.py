"""Property tests on random maps drawn outside the fixed corpus."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from tuttemaps import (
    classify,
    delta,
    dual_map,
    flip,
    gamma,
    gamma_inverse,
    is_minimal,
    lambda_,
    outdegree_sequence,
    phi,
    psi,
    tree_interval,
    tutte_polynomial,
    tutte_subgraph_oracle,
    upsilon,
)
from tuttemaps.bijection import specialization_census
from tuttemaps.corpus import random_map
from tuttemaps.enumeration import enumerate_forests, enumerate_orientations, enumerate_spanning_trees
from tuttemaps.maps import is_planar
from tuttemaps.orientation import enumerate_directed_cycles, reverse_all
from tuttemaps.poly import TuttePolynomial
from tuttemaps.sandpile import enumerate_recurrent

maps = st.builds(lambda seed, k: random_map(random.Random(seed), k), st.integers(0, 2**32), st.integers(1, 6))
SETTINGS = settings(max_examples=80, deadline=None)


@SETTINGS
@given(maps)
def test_tutte_matches_deletion_contraction(m):
    expected = TuttePolynomial(oracles.tutte_deletion_contraction(m.n_vertices, list(m.endpoints)))
    assert tutte_polynomial(m) == tutte_subgraph_oracle(m) == expected
    assert expected.is_nonnegative()


@SETTINGS
@given(maps, st.data())
def test_delta_lands_in_its_interval(m, data):
    s = data.draw(st.integers(0, m.all_edges))
    t = delta(m, s)
    assert s in tree_interval(m, t)
    assert delta(m, t) == t


@SETTINGS
@given(maps, st.data())
def test_phi_psi_inverse(m, data):
    s = data.draw(st.integers(0, m.all_edges))
    assert psi(m, phi(m, s)) == s
    o = phi(m, data.draw(st.integers(0, m.all_edges)))
    assert phi(m, psi(m, o)) == o


@SETTINGS
@given(maps)
def test_census_consistent(m):
    c = specialization_census(m)
    assert c.consistent


@SETTINGS
@given(maps)
def test_one_minimal_orientation_per_sequence(m):
    seen = {}
    for o in enumerate_orientations(m):
        if is_minimal(m, o):
            d = outdegree_sequence(m, o)
            assert d not in seen
            seen[d] = o
    assert set(seen) == oracles.outdegree_sequences(m)
    for f in enumerate_forests(m):
        assert gamma_inverse(m, gamma(m, f)) == f


@SETTINGS
@given(maps)
def test_cycle_flip_keeps_sequence_and_classes(m):
    for o in enumerate_orientations(m):
        for c in enumerate_directed_cycles(m, o):
            o2 = flip(m, o, c)
            assert outdegree_sequence(m, o2) == outdegree_sequence(m, o)
            assert classify(m, o2) == classify(m, o)


@SETTINGS
@given(maps)
def test_sandpile_inverse_pair(m):
    trees = list(enumerate_spanning_trees(m))
    assert sorted(lambda_(m, t) for t in trees) == enumerate_recurrent(m)
    for t in trees:
        assert upsilon(m, lambda_(m, t)) == t


@SETTINGS
@given(maps, st.data())
def test_planar_duality(m, data):
    if not is_planar(m):
        return
    s = data.draw(st.integers(0, m.all_edges))
    assert reverse_all(m, phi(m, s)) == phi(dual_map(m), m.all_edges & ~s)


@SETTINGS
@given(maps, st.data())
def test_root_choice_keeps_tutte(m, data):
    tok = data.draw(st.sampled_from(m.tokens))
    assert tutte_polynomial(m.with_root(tok)) == tutte_polynomial(m)
