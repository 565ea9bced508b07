"""Plain-text diagram files.

    # comment
    form annular          # or: form strip
    seam 2                # annular only
    branch present        # annular only: present | absent
    label 0 K             # optional, any number
    cup 3
    x/ 2                  # strand at 2 passes over strand at 3
    x\\ 2                  # strand at 2 passes under strand at 3
    ax+
    ax-
    cap 1

Header lines come before the first event.  :func:`serialize` writes the
canonical form, which :func:`parse` reads back to an equal diagram.
"""

from __future__ import annotations

from pathlib import Path

from .diagram import (
    BIRTH,
    CAP,
    CUP,
    DEATH,
    OVER,
    UNDER,
    AnnularDiagram,
    Diagram,
    Event,
    StripDiagram,
)
from .errors import ParseError

_EVENT_NAMES = {"cup": CUP, "cap": CAP, "x/": OVER, "x\\": UNDER}
_EVENT_TOKENS = {CUP: "cup", CAP: "cap", OVER: "x/", UNDER: "x\\"}


def parse(text: str) -> tuple[Diagram, list[int]]:
    """Parse file text; returns the diagram and the source line of every event."""
    form = seam = branch = None
    labels: dict[int, str] = {}
    events: list[Event] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head in ("ax+", "ax-"):
            if rest:
                raise ParseError(f"{head} takes no argument", lineno)
            events.append(Event(BIRTH if head == "ax+" else DEATH))
            lines.append(lineno)
            continue
        if head in _EVENT_NAMES:
            if len(rest) != 1 or not rest[0].isdigit():
                raise ParseError(f"{head} needs one positive integer position", lineno)
            pos = int(rest[0])
            if pos < 1:
                raise ParseError(f"position must be >= 1, got {pos}", lineno)
            events.append(Event(_EVENT_NAMES[head], pos))
            lines.append(lineno)
            continue
        if events:
            raise ParseError(f"header line {head!r} after the first event", lineno)
        if head == "form":
            if rest not in (["strip"], ["annular"]) or form is not None:
                raise ParseError("expected a single 'form strip' or 'form annular'", lineno)
            form = rest[0]
        elif head == "seam":
            if len(rest) != 1 or not rest[0].isdigit() or seam is not None:
                raise ParseError("expected a single 'seam <n>'", lineno)
            seam = int(rest[0])
        elif head == "branch":
            if rest not in (["present"], ["absent"]) or branch is not None:
                raise ParseError("expected 'branch present' or 'branch absent'", lineno)
            branch = rest[0] == "present"
        elif head == "label":
            if len(rest) != 2 or not rest[0].isdigit():
                raise ParseError("expected 'label <component-index> <text>'", lineno)
            idx = int(rest[0])
            if idx in labels:
                raise ParseError(f"component {idx} labelled twice", lineno)
            labels[idx] = rest[1]
        else:
            raise ParseError(f"unknown keyword {head!r}", lineno)

    if form is None:
        raise ParseError("missing 'form strip|annular' header", 1)
    label_tuple = None
    if labels:
        label_tuple = tuple(labels.get(i) for i in range(max(labels) + 1))
    if form == "strip":
        if seam is not None or branch is not None:
            raise ParseError("'seam' and 'branch' are only allowed in annular files", 1)
        return StripDiagram(tuple(events), label_tuple), lines
    if seam is None:
        raise ParseError("annular files need a 'seam <n>' header", 1)
    if branch is None:
        raise ParseError("annular files need a 'branch present|absent' header", 1)
    return AnnularDiagram(seam, tuple(events), branch, label_tuple), lines


def serialize(diagram: Diagram) -> str:
    out = []
    if diagram.is_annular:
        out += [
            "form annular",
            f"seam {diagram.seam_width}",
            f"branch {'present' if diagram.branch_present else 'absent'}",
        ]
    else:
        out.append("form strip")
    for i, lab in enumerate(diagram.component_labels or ()):
        if lab is not None:
            out.append(f"label {i} {lab}")
    for ev in diagram.events:
        if ev.kind in (BIRTH, DEATH):
            out.append(ev.kind)
        else:
            out.append(f"{_EVENT_TOKENS[ev.kind]} {ev.pos}")
    return "\n".join(out) + "\n"


def read(path) -> tuple[Diagram, list[int]]:
    return parse(Path(path).read_text())


def write(path, diagram: Diagram) -> None:
    Path(path).write_text(serialize(diagram))
