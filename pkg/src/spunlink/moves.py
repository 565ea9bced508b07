"""Local isotopy moves on event words.

Every move is local in the word and keeps the link type, so component
kinds, windings and linking numbers survive it.  :func:`apply_move` checks
that on every call unless ``check=False``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .diagram import (
    BIRTH,
    CAP,
    CROSSINGS,
    CUP,
    DEATH,
    OVER,
    UNDER,
    Diagram,
    Event,
    linking_matrix,
    validate,
)
from .errors import MoveNotApplicable

R1_INSERT = "r1-insert"
R1_DELETE = "r1-delete"
R2_INSERT = "r2-insert"
R2_DELETE = "r2-delete"
R3 = "r3"
COMMUTE = "commute"
ZIGZAG_INSERT = "zigzag-insert"
ZIGZAG_CANCEL = "zigzag-cancel"

MOVES = (R1_INSERT, R1_DELETE, R2_INSERT, R2_DELETE, R3, COMMUTE, ZIGZAG_INSERT, ZIGZAG_CANCEL)
INSERTIONS = (R1_INSERT, R2_INSERT, ZIGZAG_INSERT)


@dataclass(frozen=True)
class Move:
    """A move at event ``index``.

    Insertions place new events before ``index`` acting on the strand(s) at
    height ``pos``; ``variant`` picks the crossing tag (bit 0) and, for kinks
    and zigzags, whether the loop sits above or below the strand (bit 1).
    Deletions, R3 and commute read the events starting at ``index``.
    """

    kind: str
    index: int
    pos: int = 1
    variant: int = 0


def _flip(kind):
    return UNDER if kind == OVER else OVER


def _counts(events, initial):
    out = [initial]
    c = initial
    for ev in events:
        c += {CUP: 2, CAP: -2, BIRTH: 1, DEATH: -1}.get(ev.kind, 0)
        out.append(c)
    return out


def _span(ev):
    """(lowest height touched, strands consumed, strands produced)."""
    return {
        CUP: (ev.pos, 0, 2),
        CAP: (ev.pos, 2, 0),
        BIRTH: (1, 0, 1),
        DEATH: (1, 1, 0),
    }.get(ev.kind, (ev.pos, 2, 2))


def _commuted(e1, e2):
    lo1, in1, out1 = _span(e1)
    lo2, in2, out2 = _span(e2)
    if lo2 >= lo1 + out1:
        first, second = Event(e2.kind, lo2 - out1 + in1), e1
    elif lo2 + in2 <= lo1:
        first, second = e2, Event(e1.kind, lo1 - in2 + out2)
    else:
        return None
    for ev in (first, second):
        if ev.kind in (BIRTH, DEATH) and ev.pos != 1:
            return None
    return first, second


def _r3_rewrite(e0, e1, e2):
    a = min(e0.pos, e1.pos)
    if (e0.pos, e1.pos, e2.pos) == (a, a + 1, a):
        target = (a + 1, a, a + 1)
    elif (e0.pos, e1.pos, e2.pos) == (a + 1, a, a + 1):
        target = (a, a + 1, a)
    else:
        return None
    stack = [0, 1, 2]
    on_top = {}
    for ev in (e0, e1, e2):
        i = ev.pos - a
        lo, hi = stack[i], stack[i + 1]
        on_top[frozenset((lo, hi))] = lo if ev.kind == OVER else hi
        stack[i], stack[i + 1] = hi, lo
    if len(on_top) != 3:
        return None
    wins = [sum(1 for w in on_top.values() if w == s) for s in range(3)]
    if sorted(wins) != [0, 1, 2]:
        return None  # cyclic over-relation: not an R3 configuration
    stack = [0, 1, 2]
    out = []
    for p in target:
        i = p - a
        lo, hi = stack[i], stack[i + 1]
        out.append(Event(OVER if on_top[frozenset((lo, hi))] == lo else UNDER, p))
        stack[i], stack[i + 1] = hi, lo
    return tuple(out)


def _rewrite(events, initial, move: Move):
    """Return ``(new_events, index_map)`` or raise MoveNotApplicable."""
    k, pos, var = move.index, move.pos, move.variant
    n = len(events)
    fail = MoveNotApplicable(f"{move.kind} not applicable at event {k}")

    def insert(new):
        L = len(new)
        return events[:k] + tuple(new) + events[k:], (lambda i: i if i < k else i + L)

    def delete(L):
        return events[:k] + events[k + L:], (
            lambda i: i if i < k else (None if i < k + L else i - L)
        )

    if move.kind in INSERTIONS:
        if not 0 <= k <= n:
            raise fail
        count = _counts(events, initial)[k]
        tag = UNDER if var & 1 else OVER
        below = bool(var & 2)
        if move.kind == R2_INSERT:
            if not (1 <= pos and pos + 1 <= count):
                raise fail
            return insert([Event(tag, pos), Event(_flip(tag), pos)])
        if not 1 <= pos <= count:
            raise fail
        if move.kind == R1_INSERT:
            if below:
                return insert([Event(CUP, pos), Event(tag, pos + 1), Event(CAP, pos)])
            return insert([Event(CUP, pos + 1), Event(tag, pos), Event(CAP, pos + 1)])
        if below:
            return insert([Event(CUP, pos), Event(CAP, pos + 1)])
        return insert([Event(CUP, pos + 1), Event(CAP, pos)])

    if move.kind == R1_DELETE:
        if not 0 <= k <= n - 3:
            raise fail
        e0, e1, e2 = events[k:k + 3]
        if (
            e0.kind == CUP
            and e2.kind == CAP
            and e2.pos == e0.pos
            and e1.kind in CROSSINGS
            and e1.pos in (e0.pos - 1, e0.pos + 1)
        ):
            return delete(3)
        raise fail
    if move.kind == R2_DELETE:
        if not 0 <= k <= n - 2:
            raise fail
        e0, e1 = events[k:k + 2]
        if e0.is_crossing and e1.is_crossing and e0.pos == e1.pos and e0.kind != e1.kind:
            return delete(2)
        raise fail
    if move.kind == ZIGZAG_CANCEL:
        if not 0 <= k <= n - 2:
            raise fail
        e0, e1 = events[k:k + 2]
        if e0.kind == CUP and e1.kind == CAP and e1.pos in (e0.pos - 1, e0.pos + 1):
            return delete(2)
        raise fail
    if move.kind == R3:
        if not 0 <= k <= n - 3:
            raise fail
        trio = events[k:k + 3]
        if not all(e.is_crossing for e in trio):
            raise fail
        new = _r3_rewrite(*trio)
        if new is None:
            raise fail
        return events[:k] + new + events[k + 3:], (lambda i: i)
    if move.kind == COMMUTE:
        if not 0 <= k <= n - 2:
            raise fail
        swapped = _commuted(events[k], events[k + 1])
        if swapped is None:
            raise fail
        return events[:k] + swapped + events[k + 2:], (
            lambda i: k + 1 if i == k else (k if i == k + 1 else i)
        )
    raise ValueError(f"unknown move {move.kind!r}")


def correspondence(old_table, new_table, index_map):
    """Match components across a move via a surviving strand piece.

    Returns ``(perm, eps)``: old component i is new component ``perm[i]``,
    with orientation multiplied by ``eps[i]``.
    """
    new_by_origin = {s.origin: s.id for s in new_table.strands}
    perm, eps = [], []
    for comp in old_table.components:
        for sid, d in comp.trace:
            origin = old_table.strands[sid].origin
            if origin[0] != "seam":
                mapped = index_map(origin[0])
                if mapped is None:
                    continue
                origin = (mapped, origin[1])
            new_sid = new_by_origin.get(origin)
            if new_sid is None:
                continue
            perm.append(new_table.owner[new_sid])
            eps.append(new_table.direction[new_sid] * d)
            break
        else:
            raise AssertionError(f"component {comp.id} lost every strand")
    return tuple(perm), tuple(eps)


def apply_move_tracked(diagram: Diagram, move: Move, check: bool = True):
    """Apply a move; return ``(new_diagram, perm, eps)`` (see :func:`correspondence`).

    Labels follow their components.
    """
    old_table = validate(diagram)
    events, index_map = _rewrite(diagram.events, diagram.seam_width, move)
    unlabeled = replace(diagram, events=events, component_labels=None)
    new_table = validate(unlabeled)
    perm, eps = correspondence(old_table, new_table, index_map)
    if sorted(perm) != list(range(len(new_table.components))):
        raise AssertionError(f"{move} changed the component count")
    labels = [None] * len(perm)
    for i, j in enumerate(perm):
        labels[j] = old_table.components[i].label
    result = replace(diagram, events=events, component_labels=tuple(labels))
    if check:
        _check_invariance(diagram, result, perm, eps, move)
    return result, perm, eps


def apply_move(diagram: Diagram, move: Move | str, index: int | None = None,
               pos: int = 1, variant: int = 0, check: bool = True) -> Diagram:
    if isinstance(move, str):
        move = Move(move, index, pos, variant)
    return apply_move_tracked(diagram, move, check)[0]


def _check_invariance(before, after, perm, eps, move):
    t0, t1 = validate(before), validate(after)
    for c in t0.components:
        d = t1.components[perm[c.id]]
        if (c.kind, c.axis_endpoint_count) != (d.kind, d.axis_endpoint_count):
            raise AssertionError(f"{move} changed the kind of component {c.label}")
        if d.winding != eps[c.id] * c.winding:
            raise AssertionError(f"{move} changed the winding of component {c.label}")
    lk0, lk1 = linking_matrix(before), linking_matrix(after)
    m = len(perm)
    for i in range(m):
        for j in range(m):
            if i != j and lk1[perm[i], perm[j]] != eps[i] * eps[j] * lk0[i, j]:
                raise AssertionError(f"{move} changed linking numbers")


def applicable_moves(diagram: Diagram, insertions: bool = True) -> list[Move]:
    validate(diagram)
    events = diagram.events
    counts = _counts(events, diagram.seam_width)
    out = []
    for k in range(len(events)):
        for kind in (R1_DELETE, R2_DELETE, ZIGZAG_CANCEL, R3, COMMUTE):
            try:
                _rewrite(events, diagram.seam_width, Move(kind, k))
            except MoveNotApplicable:
                continue
            out.append(Move(kind, k))
    if insertions:
        for k in range(len(events) + 1):
            c = counts[k]
            for pos in range(1, c + 1):
                for var in range(4):
                    out.append(Move(R1_INSERT, k, pos, var))
                for var in range(2):
                    out.append(Move(ZIGZAG_INSERT, k, pos, 2 * var))
                if pos + 1 <= c:
                    for var in range(2):
                        out.append(Move(R2_INSERT, k, pos, var))
    return out


def random_move(diagram: Diagram, rng: random.Random, max_events: int | None = None) -> Move:
    """Pick an applicable move, favouring simplifications once ``max_events`` is reached."""
    grow = max_events is None or len(diagram.events) + 3 <= max_events
    moves = applicable_moves(diagram, insertions=grow)
    if not moves:
        moves = applicable_moves(diagram, insertions=True)
    by_kind: dict[str, list[Move]] = {}
    for m in moves:
        by_kind.setdefault(m.kind, []).append(m)
    kind = rng.choice(sorted(by_kind))
    return rng.choice(by_kind[kind])
