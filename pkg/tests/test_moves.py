import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import diagrams, matched, seeds
from spunlink.diagram import StripDiagram, crossing_count, delete_components, linking_matrix, validate, word
from spunlink.errors import MoveNotApplicable
from spunlink.invariants import descriptor
from spunlink.moves import (
    COMMUTE,
    R1_DELETE,
    R1_INSERT,
    R2_DELETE,
    R2_INSERT,
    R3,
    ZIGZAG_CANCEL,
    ZIGZAG_INSERT,
    Move,
    applicable_moves,
    apply_move,
    apply_move_tracked,
    random_move,
)

HOPF = StripDiagram(word("cup1; cup3; x_over2; x_over2; cap1; cap1"), ("A", "B"))


def test_r2_insert_keeps_linking():
    d = apply_move(HOPF, R2_INSERT, 3, pos=2)
    assert crossing_count(d) == crossing_count(HOPF) + 2
    assert np.array_equal(linking_matrix(d), linking_matrix(HOPF))


@pytest.mark.parametrize("variant", range(4))
def test_r1_insert_adds_one_self_crossing(variant):
    d = apply_move(HOPF, R1_INSERT, 2, pos=1, variant=variant)
    t = validate(d)
    assert crossing_count(d) == 3
    new = [c for c in t.crossings if c.over == c.under]
    assert len(new) == 1
    assert np.array_equal(linking_matrix(d), linking_matrix(HOPF))


def test_insert_then_delete_round_trips():
    d = apply_move(HOPF, R1_INSERT, 2, pos=1)
    assert apply_move(d, R1_DELETE, 2).events == HOPF.events
    d = apply_move(HOPF, R2_INSERT, 3, pos=2, variant=1)
    assert apply_move(d, R2_DELETE, 3).events == HOPF.events
    d = apply_move(HOPF, ZIGZAG_INSERT, 2, pos=2)
    assert apply_move(d, ZIGZAG_CANCEL, 2).events == HOPF.events


def test_r3_keeps_crossings_and_linking():
    d = StripDiagram(word("cup1; cup3; cup5; x_over2; x_over3; x_over2; cap1; cap1; cap1"))
    assert Move(R3, 3) in applicable_moves(d, insertions=False)
    e = apply_move(d, R3, 3)
    assert e.events[3:6] == word("x_over3; x_over2; x_over3")
    assert crossing_count(e) == crossing_count(d)
    assert np.array_equal(linking_matrix(e), linking_matrix(d))


def test_commute_distant_events():
    d = StripDiagram(word("cup1; cup3; cap1; cap1"))
    e = apply_move(d, COMMUTE, 1)
    assert e.events == word("cup1; cap1; cup1; cap1")
    with pytest.raises(MoveNotApplicable):
        apply_move(HOPF, COMMUTE, 2)


def test_not_applicable():
    with pytest.raises(MoveNotApplicable):
        apply_move(HOPF, R2_DELETE, 0)
    with pytest.raises(MoveNotApplicable):
        apply_move(HOPF, ZIGZAG_CANCEL, 0)


def test_labels_survive_moves(rng):
    d = HOPF
    for _ in range(40):
        d = apply_move(d, random_move(d, rng, max_events=20))
    assert sorted(validate(d).labels) == ["A", "B"]


@given(diagrams, seeds)
def test_random_moves_preserve_invariants(d, seed):
    rng = random.Random(seed)
    for _ in range(5):
        move = random_move(d, rng, max_events=30)
        e, perm, eps = apply_move_tracked(d, move)
        t0, t1 = validate(d), validate(e)
        for c in t0.components:
            assert t1.components[perm[c.id]].kind == c.kind
            assert abs(t1.components[perm[c.id]].winding) == abs(c.winding)
        assert matched(descriptor(d), descriptor(e), perm) == descriptor(d)
        d = e


@given(diagrams, st.data())
def test_delete_commutes_with_moves(d, data):
    t = validate(d)
    if len(t.components) < 2:
        return
    drop = data.draw(st.sets(st.sampled_from(range(len(t.components))),
                             min_size=1, max_size=len(t.components) - 1))
    move = data.draw(st.sampled_from(applicable_moves(d)))
    e, perm, _ = apply_move_tracked(d, move)
    lhs = delete_components(e, [perm[i] for i in drop])
    rhs = delete_components(d, drop)
    a, b = descriptor(lhs), descriptor(rhs)
    assert sorted(a.labels) == sorted(b.labels)
    assert a.permuted([b.labels.index(lab) for lab in a.labels]) == b
