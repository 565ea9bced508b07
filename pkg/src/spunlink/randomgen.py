"""Random valid event words, for property tests and demos."""

from __future__ import annotations

import random

from .diagram import (
    BIRTH,
    CAP,
    CUP,
    DEATH,
    OVER,
    UNDER,
    AnnularDiagram,
    Event,
    StripDiagram,
)


def random_events(rng: random.Random, initial: int, max_events: int, max_height: int = 6):
    """A random sweep-valid word from ``initial`` strands back to ``initial``."""
    target = initial
    events = []
    c = initial
    budget = rng.randint(max(1, max_events // 3), max_events)

    def closing_cost(c):
        gap = abs(c - target)
        return gap // 2 + gap % 2

    while len(events) + 1 + closing_cost(c) + 1 < budget:
        options = [(CUP, 2)] if c + 2 <= max_height else []
        if c < max_height:
            options.append((BIRTH, 1))
        if c >= 1:
            options.append((DEATH, 1))
        if c >= 2:
            options += [(CAP, 2), (OVER, 3), (UNDER, 3)]
        kind = rng.choices([k for k, _ in options], [w for _, w in options])[0]
        if kind == CUP:
            ev = Event(CUP, rng.randint(1, c + 1))
            c += 2
        elif kind == BIRTH:
            ev, c = Event(BIRTH), c + 1
        elif kind == DEATH:
            ev, c = Event(DEATH), c - 1
        elif kind == CAP:
            ev = Event(CAP, rng.randint(1, c - 1))
            c -= 2
        else:
            ev = Event(kind, rng.randint(1, c - 1))
        events.append(ev)
    while c > target:
        if c - target >= 2:
            events.append(Event(CAP, rng.randint(1, c - 1)))
            c -= 2
        else:
            events.append(Event(DEATH))
            c -= 1
    while c < target:
        if target - c >= 2:
            events.append(Event(CUP, rng.randint(1, c + 1)))
            c += 2
        else:
            events.append(Event(BIRTH))
            c += 1
    return tuple(events)


def random_strip(rng: random.Random, max_events: int = 20, max_height: int = 6) -> StripDiagram:
    while True:
        events = random_events(rng, 0, max_events, max_height)
        if events:
            return StripDiagram(events)


def random_annular(rng: random.Random, seam_width: int | None = None, max_events: int = 30,
                   branch_present: bool = True, max_height: int = 6) -> AnnularDiagram:
    if seam_width is None:
        seam_width = rng.randint(1, 4)
    while True:
        events = random_events(rng, seam_width, max_events, max(max_height, seam_width + 2))
        if events or seam_width:
            return AnnularDiagram(seam_width, events, branch_present)
