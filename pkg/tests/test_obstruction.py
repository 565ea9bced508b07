import random

import pytest

from spunlink.diagram import AnnularDiagram
from spunlink.errors import NotAnnular
from spunlink.fixtures import family, fig6_2, fig6_2_branched, main_pair
from spunlink.moves import apply_move, random_move
from spunlink.obstruction import (
    DISTINGUISHED,
    EQUIVALENT_COVERS,
    INCONCLUSIVE,
    SCAN_DEGREES,
    SHAPE,
    check_preconditions,
    is_prime_power,
    obstruct,
    scan,
)


def shuffled(d, seed, steps=25):
    rng = random.Random(seed)
    for _ in range(steps):
        d = apply_move(d, random_move(d, rng, max_events=len(d.events) + 12))
    return d


@pytest.mark.parametrize("p, expected", [(8, True), (12, False), (1, False), (2, True), (9, True),
                                         (0, False), (49, True), (6, False), (97, True)])
def test_prime_powers(p, expected):
    assert is_prime_power(p) is expected


def test_preconditions_main_pair():
    L, Lp = main_pair()
    report = check_preconditions(L, Lp, 5)
    assert report.ok and report.notes == ()


def test_preconditions_fail():
    B = fig6_2_branched()
    assert not check_preconditions(B, B, 5).semi_boundary_A
    report = check_preconditions(family(1), family(2), 6)
    assert not report.prime_power_ok and not report.ok
    absent = AnnularDiagram(2, family(1).events, branch_present=False)
    assert not check_preconditions(absent, family(1), 5).branch_present_A
    with pytest.raises(NotAnnular):
        check_preconditions(fig6_2(), family(1), 5)


def test_main_pair_distinguished():
    v = obstruct(*main_pair(), 5)
    assert v.kind == DISTINGUISHED and v.witness is None
    assert v.summary().startswith("DISTINGUISHED (p=5)")


@pytest.mark.parametrize("i", range(5))
@pytest.mark.parametrize("j", range(5))
def test_family_pairs(i, j):
    v = obstruct(family(i), family(j), 5)
    assert v.distinguished == (i != j)


def test_self_is_inconclusive_with_identity():
    L, _ = main_pair()
    v = obstruct(L, L, 3)
    assert v.kind == INCONCLUSIVE and v.reason == EQUIVALENT_COVERS
    assert v.witness == tuple(range(len(v.cover_A)))
    assert v.summary().startswith("INCONCLUSIVE (p=3)")


def test_precondition_failure_reasons():
    v = obstruct(fig6_2_branched(), fig6_2_branched(), 5)
    assert v.kind == INCONCLUSIVE and v.reason.startswith("precondition failure")
    v = obstruct(family(1), main_pair()[0], 5)
    assert v.kind == INCONCLUSIVE and v.reason.startswith(SHAPE)


@pytest.mark.parametrize("seed", range(4))
def test_symmetric_and_move_stable(seed):
    L, Lp = main_pair()
    L2, Lp2 = shuffled(L, seed), shuffled(Lp, seed + 100)
    assert obstruct(L2, Lp2, 5).distinguished
    assert obstruct(Lp2, L2, 5).distinguished
    assert not obstruct(L, L2, 5).distinguished
    assert not obstruct(family(2), shuffled(family(2), seed), 3).distinguished


def test_scan_reports_first_success():
    v = scan(family(1), family(2))
    assert v.distinguished and v.p == SCAN_DEGREES[0]
    v = scan(family(1), family(1))
    assert not v.distinguished and v.p == SCAN_DEGREES[-1]
