"""Morse event words for 1-links in the upper half-plane.

A diagram is read left to right.  At every moment a vertical slice meets a
stack of strands numbered 1, 2, ... from the bottom; the bottom boundary of
the strip is the spinning axis.  Events act on that stack:

    cup i      two new strands appear at heights i, i+1 (a local minimum in x)
    cap i      the strands at heights i, i+1 join and stop
    x_over i   the strand at i passes over the strand at i+1; they swap
    x_under i  the strand at i passes under the strand at i+1; they swap
    ax+        a new strand leaves the axis at height 1
    ax-        the strand at height 1 ends on the axis

A strip diagram starts and ends with no strands.  An annular diagram starts
with ``seam_width`` strands entering through a seam on the left and must end
with the same number leaving on the right; right height i is glued to left
height i.  The annular form is the link cut open along the half-disk of a
trivial branch arc, which is itself not drawn.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    AxisEventNotAtBottom,
    EmptyResult,
    NonEmptyFinalState,
    NotAnnular,
    NotASubset,
    OddCrossingParity,
    PositionOutOfRange,
    SeamWidthMismatch,
)

CUP = "cup"
CAP = "cap"
OVER = "over"
UNDER = "under"
BIRTH = "ax+"
DEATH = "ax-"

CROSSINGS = (OVER, UNDER)
KINDS = (CUP, CAP, OVER, UNDER, BIRTH, DEATH)

ARC = "arc"
CIRCLE = "circle"


@dataclass(frozen=True)
class Event:
    kind: str
    pos: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown event kind {self.kind!r}")

    @property
    def is_crossing(self) -> bool:
        return self.kind in CROSSINGS

    def __str__(self):
        if self.kind in (BIRTH, DEATH):
            return self.kind
        if self.kind in CROSSINGS:
            return f"x_{self.kind}{self.pos}"
        return f"{self.kind}{self.pos}"


def cup(pos):
    return Event(CUP, pos)


def cap(pos):
    return Event(CAP, pos)


def over(pos):
    return Event(OVER, pos)


def under(pos):
    return Event(UNDER, pos)


def axis_birth():
    return Event(BIRTH)


def axis_death():
    return Event(DEATH)


_TOKEN = re.compile(r"(cup|cap|x_over|x_under|x/|x\\)\s*(\d+)|(ax[+-])")


def word(text: str) -> tuple[Event, ...]:
    """Parse a compact word such as ``"cup1; cup3; x_over2; cap1"``."""
    events = []
    for chunk in re.split(r"[;\n]", text):
        chunk = chunk.strip()
        if not chunk:
            continue
        m = _TOKEN.fullmatch(chunk)
        if m is None:
            raise ValueError(f"cannot parse event {chunk!r}")
        if m.group(3):
            events.append(Event(m.group(3)))
            continue
        name, pos = m.group(1), int(m.group(2))
        kind = {"x_over": OVER, "x/": OVER, "x_under": UNDER, "x\\": UNDER}.get(name, name)
        events.append(Event(kind, pos))
    return tuple(events)


def _normalize_labels(labels):
    if labels is None:
        return None
    labels = tuple(None if lab is None else str(lab) for lab in labels)
    while labels and labels[-1] is None:
        labels = labels[:-1]
    for lab in labels:
        if lab is not None and (not lab or re.search(r"\s", lab)):
            raise ValueError(f"component label {lab!r} must be non-empty without whitespace")
    return labels or None


@dataclass(frozen=True)
class StripDiagram:
    events: tuple[Event, ...]
    component_labels: tuple[str | None, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        object.__setattr__(self, "component_labels", _normalize_labels(self.component_labels))

    @property
    def seam_width(self) -> int:
        return 0

    @property
    def is_annular(self) -> bool:
        return False


@dataclass(frozen=True)
class AnnularDiagram:
    seam_width: int
    events: tuple[Event, ...]
    branch_present: bool = True
    component_labels: tuple[str | None, ...] | None = None

    def __post_init__(self):
        if self.seam_width < 0:
            raise ValueError("seam_width must be non-negative")
        object.__setattr__(self, "events", tuple(self.events))
        object.__setattr__(self, "component_labels", _normalize_labels(self.component_labels))

    @property
    def is_annular(self) -> bool:
        return True


Diagram = StripDiagram | AnnularDiagram


# -- tracing -----------------------------------------------------------------


@dataclass(frozen=True)
class Strand:
    """A maximal piece of the diagram between two creation/termination points.

    Strands run through crossings unchanged.  ``origin`` is ``("seam", h)``
    for a strand entering through the left seam at height h, otherwise
    ``(event_index, slot)`` with slot 0 for the lower strand of a cup.
    """

    id: int
    origin: tuple
    start: str  # "seam" | "cup" | "axis"
    end: str  # "seam" | "cap" | "axis"
    end_index: int  # event index of termination; len(events) for seam exits
    end_pos: int


@dataclass(frozen=True)
class Component:
    id: int
    label: str
    kind: str
    axis_endpoint_count: int
    trace: tuple[tuple[int, int], ...]  # (strand id, +1 along the sweep / -1 against)
    winding: int = 0

    @property
    def anchor(self) -> int:
        return min(s for s, _ in self.trace)

    @property
    def strands(self) -> frozenset[int]:
        return frozenset(s for s, _ in self.trace)


@dataclass(frozen=True)
class CrossingRecord:
    index: int
    over: int  # component ids
    under: int
    sign: int
    over_strand: int
    under_strand: int


@dataclass(frozen=True)
class SeamPass:
    height: int
    component: int
    direction: int  # +1 when the canonical orientation passes rightward


@dataclass(frozen=True)
class ComponentTable:
    components: tuple[Component, ...]
    crossings: tuple[CrossingRecord, ...]
    strands: tuple[Strand, ...]
    seam_passes: tuple[SeamPass, ...] = ()
    annular: bool = False
    direction: tuple[int, ...] = field(default=(), repr=False)
    owner: tuple[int, ...] = field(default=(), repr=False)

    def __len__(self):
        return len(self.components)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.components)

    def by_label(self, label: str) -> Component:
        for c in self.components:
            if c.label == label:
                return c
        raise KeyError(label)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller id stays root so roots are anchors
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _sweep(events: Sequence[Event], initial: int):
    """Simulate the stack; returns strands, end-joins, raw crossings, final stack."""
    stack = list(range(initial))
    origins = [("seam", h + 1) for h in range(initial)]
    starts = ["seam"] * initial
    ends: dict[int, tuple[str, int, int]] = {}
    joins: dict[tuple[int, int], tuple[int, int]] = {}
    raw_crossings = []

    def new(origin, start):
        origins.append(origin)
        starts.append(start)
        return len(origins) - 1

    for idx, ev in enumerate(events):
        k, pos = ev.kind, ev.pos
        count = len(stack)
        if k in (BIRTH, DEATH):
            if pos != 1:
                raise AxisEventNotAtBottom(f"event {idx}: axis events act at height 1, got {pos}", idx)
            if k == BIRTH:
                stack.insert(0, new((idx, 0), "axis"))
            else:
                if count < 1:
                    raise PositionOutOfRange(f"event {idx}: ax- with no strands", idx)
                s = stack.pop(0)
                ends[s] = ("axis", idx, 1)
            continue
        if pos < 1:
            raise PositionOutOfRange(f"event {idx}: position {pos} < 1", idx)
        if k == CUP:
            if pos > count + 1:
                raise PositionOutOfRange(f"event {idx}: cup {pos} with {count} strands", idx)
            a = new((idx, 0), "cup")
            b = new((idx, 1), "cup")
            stack[pos - 1:pos - 1] = [a, b]
            joins[(a, 0)] = (b, 0)
            joins[(b, 0)] = (a, 0)
            continue
        if pos + 1 > count:
            raise PositionOutOfRange(f"event {idx}: {ev} with {count} strands", idx)
        a, b = stack[pos - 1], stack[pos]
        if k == CAP:
            del stack[pos - 1:pos + 1]
            ends[a] = ("cap", idx, pos)
            ends[b] = ("cap", idx, pos + 1)
            joins[(a, 1)] = (b, 1)
            joins[(b, 1)] = (a, 1)
        else:
            stack[pos - 1], stack[pos] = b, a
            raw_crossings.append((idx, k, a, b))

    n_events = len(events)
    for h, s in enumerate(stack):
        ends[s] = ("seam", n_events, h + 1)
    strands = tuple(
        Strand(i, origins[i], starts[i], ends[i][0], ends[i][1], ends[i][2])
        for i in range(len(origins))
    )
    return strands, joins, raw_crossings, stack


def _walk(first: int, direction: int, joins) -> list[tuple[int, int]]:
    """Follow the component from ``first`` until a free end or back to the start."""
    out = [(first, direction)]
    s, d = first, direction
    while True:
        exit_end = (s, 1 if d > 0 else 0)
        nxt = joins.get(exit_end)
        if nxt is None:
            return out
        s, end = nxt
        d = 1 if end == 0 else -1
        if s == first:
            return out
        out.append((s, d))


def trace(events: Sequence[Event], seam_width: int | None = None, labels=None) -> ComponentTable:
    """Trace components of an event word; ``seam_width=None`` means strip form."""
    annular = seam_width is not None
    initial = seam_width or 0
    strands, joins, raw, final = _sweep(events, initial)
    n_events = len(events)
    if not annular and final:
        raise NonEmptyFinalState(f"{len(final)} strand(s) left open at the end", n_events)
    if annular:
        if len(final) != initial:
            raise SeamWidthMismatch(
                f"word ends with {len(final)} strand(s), seam width is {initial}", n_events
            )
        joins = dict(joins)
        for h, s in enumerate(final):
            joins[(s, 1)] = (h, 0)
            joins[(h, 0)] = (s, 1)

    uf = _UnionFind(len(strands))
    for (a, _), (b, _) in joins.items():
        uf.union(a, b)
    roots = sorted({uf.find(s.id) for s in strands})

    labels = tuple(labels or ())
    direction = [0] * len(strands)
    owner = [0] * len(strands)
    components = []
    for cid, anchor in enumerate(roots):
        forward = _walk(anchor, 1, joins)
        closed = joins.get((forward[-1][0], 1 if forward[-1][1] > 0 else 0)) is not None
        if closed:
            path = forward
        else:
            backward = _walk(anchor, -1, joins)
            path = [(s, -d) for s, d in reversed(backward[1:])] + forward
        for s, d in path:
            direction[s] = d
            owner[s] = cid
        axis_ends = sum((strands[s].start == "axis") + (strands[s].end == "axis") for s, _ in path)
        label = labels[cid] if cid < len(labels) and labels[cid] is not None else f"K{cid}"
        components.append(
            Component(cid, label, ARC if axis_ends else CIRCLE, axis_ends, tuple(path))
        )

    crossings = []
    for idx, kind, lower, upper in raw:
        sign = direction[lower] * direction[upper]
        if kind == OVER:
            o, u = lower, upper
        else:
            o, u, sign = upper, lower, -sign
        crossings.append(CrossingRecord(idx, owner[o], owner[u], sign, o, u))

    passes = []
    if annular:
        wind = [0] * len(components)
        for h, s in enumerate(final):
            d = direction[s]
            passes.append(SeamPass(h + 1, owner[s], d))
            wind[owner[s]] += d
        components = [replace(c, winding=wind[c.id]) for c in components]

    return ComponentTable(
        tuple(components),
        tuple(crossings),
        strands,
        tuple(passes),
        annular,
        tuple(direction),
        tuple(owner),
    )


@lru_cache(maxsize=4096)
def validate(diagram: Diagram) -> ComponentTable:
    """Sweep-validate a diagram and return its component table.

    Raises a :class:`~spunlink.errors.DiagramError` subclass carrying the
    first offending event index.
    """
    if diagram.is_annular:
        table = trace(diagram.events, diagram.seam_width, diagram.component_labels)
    else:
        table = trace(diagram.events, None, diagram.component_labels)
    if diagram.component_labels and len(diagram.component_labels) > len(table.components):
        raise ValueError(
            f"{len(diagram.component_labels)} labels for {len(table.components)} components"
        )
    return table


def is_valid(diagram: Diagram) -> bool:
    try:
        validate(diagram)
    except Exception:
        return False
    return True


def linking_matrix(diagram: Diagram) -> np.ndarray:
    """Signed linking numbers between components under canonical orientations.

    Arc-arc entries are 0: two arcs closed along the axis have no
    well-defined linking number and it never feeds an invariant.
    """
    table = validate(diagram)
    m = len(table.components)
    twice = np.zeros((m, m), dtype=np.int64)
    for c in table.crossings:
        if c.over != c.under:
            twice[c.over, c.under] += c.sign
            twice[c.under, c.over] += c.sign
    kinds = [c.kind for c in table.components]
    for i in range(m):
        twice[i, i] = 0
        for j in range(m):
            if kinds[i] == ARC and kinds[j] == ARC:
                twice[i, j] = 0
            elif twice[i, j] % 2:
                raise OddCrossingParity(f"components {i}, {j} meet in an odd signed sum")
    return twice // 2


def winding(diagram: Diagram, component: int) -> int:
    if not diagram.is_annular:
        raise NotAnnular("winding is defined for annular diagrams only")
    return validate(diagram).components[component].winding


def crossing_count(diagram: Diagram) -> int:
    return sum(1 for ev in diagram.events if ev.is_crossing)


def _replay(events: Sequence[Event], initial: int):
    """Yield ``(index, event, stack_before)`` with strand ids as in :func:`trace`."""
    stack = list(range(initial))
    next_id = initial
    for idx, ev in enumerate(events):
        yield idx, ev, list(stack)
        k, pos = ev.kind, ev.pos
        if k == BIRTH:
            stack.insert(0, next_id)
            next_id += 1
        elif k == DEATH:
            stack.pop(0)
        elif k == CUP:
            stack[pos - 1:pos - 1] = [next_id, next_id + 1]
            next_id += 2
        elif k == CAP:
            del stack[pos - 1:pos + 1]
        else:
            stack[pos - 1], stack[pos] = stack[pos], stack[pos - 1]


def delete_components(diagram: Diagram, ids: Iterable[int]) -> Diagram:
    """Erase the given components, keeping the induced diagram on the rest.

    Crossings with deleted strands disappear and heights are compacted.
    Surviving components keep their labels.
    """
    table = validate(diagram)
    ids = set(ids)
    all_ids = {c.id for c in table.components}
    if not ids or not ids <= all_ids:
        raise NotASubset(f"{sorted(ids)} is not a nonempty subset of {sorted(all_ids)}")
    if ids == all_ids:
        raise EmptyResult("deleting every component leaves nothing")
    dead = {s for c in table.components if c.id in ids for s in c.strands}
    born = {s.origin: s.id for s in table.strands}

    def below(stack, pos):
        return sum(1 for s in stack[:pos - 1] if s not in dead)

    out = []
    for idx, ev, stack in _replay(diagram.events, diagram.seam_width):
        k, pos = ev.kind, ev.pos
        if k == BIRTH:
            if born[(idx, 0)] not in dead:
                out.append(ev)
        elif k == DEATH:
            if stack[0] not in dead:
                out.append(ev)
        elif k == CUP:
            if born[(idx, 0)] not in dead:
                out.append(Event(CUP, below(stack, pos) + 1))
        elif stack[pos - 1] not in dead and stack[pos] not in dead:
            out.append(Event(k, below(stack, pos) + 1))

    keep = [c for c in table.components if c.id not in ids]
    labels = tuple(c.label for c in keep)
    if diagram.is_annular:
        width = sum(1 for h in range(diagram.seam_width) if h not in dead)
        return AnnularDiagram(width, tuple(out), diagram.branch_present, labels)
    return StripDiagram(tuple(out), labels)


def with_labels(diagram: Diagram, labels) -> Diagram:
    return replace(diagram, component_labels=tuple(labels))
