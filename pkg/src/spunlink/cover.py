"""p-fold covering-links along the branch sphere of an annular diagram.

Cutting the half-space open along the branch arc's half-disk gives the
annular word.  Stacking p copies of it and gluing the last copy's right
seam back to the first copy's left seam is the branched cyclic cover
downstairs; spinning the result gives the covering-link upstairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import AnnularDiagram, _replay, validate
from .errors import IndexOutOfRange, NonPositiveDegree, NotAnnular


@dataclass(frozen=True)
class Lift:
    component: int
    label: str
    base_component: int
    base_label: str
    deck_index: int
    cover_degree: int


@dataclass(frozen=True)
class LiftProvenance:
    p: int
    lifts: tuple[Lift, ...]
    # anchor_lifts[b][k]: lifted component holding the copy-k instance of base b's anchor
    anchor_lifts: tuple[tuple[int, ...], ...]

    def lifts_of(self, base_component: int) -> list[Lift]:
        return [lift for lift in self.lifts if lift.base_component == base_component]


def _auto(labels):
    if all(lab == f"K{i}" for i, lab in enumerate(labels)):
        return None
    return tuple(labels)


def cover_lift(diagram: AnnularDiagram, p: int, keep_branch: bool = False):
    """Return ``(lifted_diagram, provenance)`` for the p-fold cover.

    With ``keep_branch`` the lifted branch stays implicit in the output, so
    the result can be covered again.
    """
    if not getattr(diagram, "is_annular", False):
        raise NotAnnular("covers are taken of annular diagrams")
    if p < 1:
        raise NonPositiveDegree(f"cover degree must be >= 1, got {p}")
    base = validate(diagram)
    n, L = diagram.seam_width, len(diagram.events)
    events = diagram.events * p
    lifted = AnnularDiagram(n, events, keep_branch)
    table = validate(lifted)

    by_origin = {s.origin: s.id for s in table.strands}
    boundary = {0: list(range(n))}
    for idx, _, stack in _replay(events, n):
        if idx % L == 0 and idx:
            boundary[idx // L] = stack
    if L == 0:
        boundary = {k: list(range(n)) for k in range(p)}

    def instance(base_strand, k):
        origin = base.strands[base_strand].origin
        if origin[0] == "seam":
            return boundary[k][origin[1] - 1]
        return by_origin[(k * L + origin[0], origin[1])]

    owner = table.owner
    anchor_lifts = []
    info = {}
    for b in base.components:
        hits = tuple(owner[instance(b.anchor, k)] for k in range(p))
        anchor_lifts.append(hits)
        for k, comp in enumerate(hits):
            if comp not in info:
                info[comp] = [b.id, k, 0]
            info[comp][2] += 1

    lifts = []
    for comp in table.components:
        b, k, degree = info[comp.id]
        base_label = base.components[b].label
        single = len(set(anchor_lifts[b])) == 1
        label = base_label if single else f"{base_label}.{k}"
        lifts.append(Lift(comp.id, label, b, base_label, k, degree))

    labels = _auto([lift.label for lift in lifts])
    lifted = AnnularDiagram(n, events, keep_branch, labels)
    return lifted, LiftProvenance(p, tuple(lifts), tuple(anchor_lifts))


def deck_action(prov: LiftProvenance, k: int) -> tuple[int, ...]:
    """Permutation of lifted component ids induced by shifting copies by k."""
    if not 0 <= k < prov.p:
        raise IndexOutOfRange(f"deck index {k} outside 0..{prov.p - 1}")
    perm = list(range(len(prov.lifts)))
    for hits in prov.anchor_lifts:
        for c in range(prov.p):
            perm[hits[c]] = hits[(c + k) % prov.p]
    return tuple(perm)
