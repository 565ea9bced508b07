import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from spunlink.randomgen import random_annular, random_strip

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

seeds = st.integers(min_value=0, max_value=2**32 - 1)
strips = seeds.map(lambda s: random_strip(random.Random(s), max_events=24))
annulars = seeds.map(lambda s: random_annular(random.Random(s), max_events=24))
diagrams = st.one_of(strips, annulars)


@pytest.fixture
def rng():
    return random.Random(20261015)


def matched(d_before, d_after, perm):
    """Reorder ``d_after`` into the component order of ``d_before`` given a move's perm."""
    off = 1 if d_before.branch_index is not None else 0
    full = tuple(range(off)) + tuple(p + off for p in perm)
    inverse = {v: k for k, v in enumerate(full)}
    return d_after.permuted([inverse[k] for k in range(len(full))])


def random_descriptor(rng, m=None, top=3):
    from spunlink.invariants import SurfaceLinkDescriptor

    m = rng.randint(1, 8) if m is None else m
    genera = [rng.randint(0, 1) for _ in range(m)]
    alk = [[rng.randint(0, top) if genera[i] else 0 for _ in range(m)] for i in range(m)]
    return SurfaceLinkDescriptor(tuple(f"c{i}" for i in range(m)), genera, alk)


def is_witness(d1, d2, pi):
    m = len(d1)
    if len(d2) != m or sorted(pi) != list(range(m)):
        return False
    return all(d1.genera[i] == d2.genera[pi[i]] for i in range(m)) and all(
        d1.alk[i][j] == d2.alk[pi[i]][pi[j]] for i in range(m) for j in range(m) if i != j)
