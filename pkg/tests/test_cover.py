import random
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import annulars, seeds
from oracles import unrolled_cover
from spunlink.cover import cover_lift, deck_action
from spunlink.diagram import CIRCLE, AnnularDiagram, StripDiagram, crossing_count, validate, word
from spunlink.errors import IndexOutOfRange, NonPositiveDegree, NotAnnular
from spunlink.fixtures import family
from spunlink.invariants import descriptor
from spunlink.randomgen import random_annular

degrees = st.integers(min_value=1, max_value=5)


def compose(f, g):
    return tuple(f[g[i]] for i in range(len(g)))


def test_degree_one_is_identity():
    d = family(2)
    lifted, prov = cover_lift(d, 1)
    assert lifted.events == d.events and lifted.seam_width == d.seam_width
    assert lifted.component_labels == d.component_labels
    assert not lifted.branch_present
    assert [(l.deck_index, l.cover_degree) for l in prov.lifts] == [(0, 1)]
    assert cover_lift(d, 1, keep_branch=True)[0] == d


def test_family_1_necklace_at_3():
    lifted, prov = cover_lift(family(1), 3)
    c = descriptor(lifted)
    assert c.genera == (1, 1, 1)
    assert c.off_diagonal_values() == {1}
    assert c.labels == ("K.0", "K.1", "K.2")
    g = deck_action(prov, 1)
    assert sorted(g) == [0, 1, 2] and all(g[i] != i for i in range(3))
    assert compose(g, compose(g, g)) == (0, 1, 2)


def test_family_0_unlinked():
    for p in range(1, 6):
        assert descriptor(cover_lift(family(0), p)[0]).off_diagonal_values() <= {0}


def test_through_strand_degree_four():
    lifted, prov = cover_lift(AnnularDiagram(1, ()), 4)
    (lift,) = prov.lifts
    assert lift.cover_degree == 4 and lift.label == "K0"
    assert validate(lifted).components[0].winding == 1


def test_errors():
    with pytest.raises(NotAnnular):
        cover_lift(StripDiagram(word("cup1; cap1")), 2)
    with pytest.raises(NonPositiveDegree):
        cover_lift(family(1), 0)
    _, prov = cover_lift(family(1), 3)
    with pytest.raises(IndexOutOfRange):
        deck_action(prov, 3)


@given(annulars, degrees)
def test_lift_counts_and_windings(d, p):
    base = validate(d)
    lifted, prov = cover_lift(d, p)
    table = validate(lifted)
    assert crossing_count(lifted) == p * crossing_count(d)
    for b in base.components:
        lifts = prov.lifts_of(b.id)
        if b.kind == CIRCLE:
            g = gcd(p, b.winding)
            assert len(lifts) == g
            assert sum(l.cover_degree for l in lifts) == p
            for l in lifts:
                assert table.components[l.component].winding == b.winding // g
        else:
            assert len(lifts) == p
            assert all(table.components[l.component].kind != CIRCLE for l in lifts)


@given(annulars, degrees)
def test_deck_group_law(d, p):
    _, prov = cover_lift(d, p)
    assert deck_action(prov, 0) == tuple(range(len(prov.lifts)))
    for a in range(p):
        for b in range(p):
            assert compose(deck_action(prov, a), deck_action(prov, b)) == deck_action(prov, (a + b) % p)


@given(annulars, degrees)
def test_matches_unrolling_oracle(d, p):
    lifted, prov = cover_lift(d, p)
    c = descriptor(lifted)
    expect = unrolled_cover(d, p)
    got = (c.genera, c.alk, tuple(
        (l.label, l.base_component, l.base_label, l.deck_index, l.cover_degree) for l in prov.lifts))
    assert got == expect


@given(seeds, st.integers(2, 3), st.integers(2, 3))
def test_iterated_covers(seed, p, q):
    rng = random.Random(seed)
    while True:
        d = random_annular(rng, max_events=20)
        if all(c.winding == 0 for c in validate(d).components):
            break
    once = descriptor(cover_lift(d, p * q)[0])
    twice = descriptor(cover_lift(cover_lift(d, p, keep_branch=True)[0], q)[0])
    assert (once.genera, once.alk) == (twice.genera, twice.alk)
