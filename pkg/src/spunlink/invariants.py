"""Genera and alinking numbers of spun surface-links, and the equivalences built on them.

Spinning a half-plane diagram around its axis turns arcs into 2-spheres and
circles into tori.  A linking number between a circle on a spun sphere and
another component is always zero, so sphere rows vanish.  On a spun torus
the circles are generated by a slice copy of the base circle and a fiber
circle; the fiber misses the other component's spun Seifert hypersurface,
so the alinking number of torus i around component j is
``|lk(k_i, closure(k_j))|`` where arcs are closed along the axis.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import gcd

import numpy as np

from .diagram import ARC, Diagram, delete_components, linking_matrix, validate

BRANCH_LABEL = "branch"


@dataclass(frozen=True)
class SurfaceLinkDescriptor:
    labels: tuple[str, ...]
    genera: tuple[int, ...]
    alk: tuple[tuple[int, ...], ...]  # diagonal stored as 0 and ignored
    branch_index: int | None = None

    def __post_init__(self):
        m = len(self.genera)
        if len(self.labels) != m or len(self.alk) != m or any(len(r) != m for r in self.alk):
            raise ValueError("labels, genera and alk must agree in size")
        alk = tuple(
            tuple(0 if i == j else int(v) for j, v in enumerate(row)) for i, row in enumerate(self.alk)
        )
        if any(v < 0 for row in alk for v in row):
            raise ValueError("alinking numbers are non-negative")
        object.__setattr__(self, "alk", alk)
        object.__setattr__(self, "genera", tuple(int(g) for g in self.genera))
        object.__setattr__(self, "labels", tuple(self.labels))

    def __len__(self):
        return len(self.genera)

    @property
    def components(self) -> list[tuple[str, int]]:
        return list(zip(self.labels, self.genera))

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.alk, dtype=np.int64).reshape(len(self), len(self))

    def off_diagonal_values(self) -> set[int]:
        m = len(self)
        return {self.alk[i][j] for i in range(m) for j in range(m) if i != j}

    def permuted(self, sigma) -> "SurfaceLinkDescriptor":
        """Move component k to slot ``sigma[k]``."""
        m = len(self)
        inv = [0] * m
        for k, s in enumerate(sigma):
            inv[s] = k
        branch = None if self.branch_index is None else sigma[self.branch_index]
        return SurfaceLinkDescriptor(
            tuple(self.labels[inv[i]] for i in range(m)),
            tuple(self.genera[inv[i]] for i in range(m)),
            tuple(tuple(self.alk[inv[i]][inv[j]] for j in range(m)) for i in range(m)),
            branch,
        )


def alinking_generator(values) -> int:
    """Non-negative generator of the subgroup of Z spanned by ``values``."""
    g = 0
    for v in values:
        g = gcd(g, int(v))
    return g


def descriptor(diagram: Diagram) -> SurfaceLinkDescriptor:
    """Descriptor of the spun surface-link of a strip or annular diagram.

    For an annular diagram with its branch present, the branch sphere is
    component 0 and torus i links it with ``|winding(i)|``.
    """
    table = validate(diagram)
    lk = linking_matrix(diagram)
    comps = table.components
    branch = diagram.is_annular and diagram.branch_present
    off = 1 if branch else 0
    m = len(comps) + off
    alk = [[0] * m for _ in range(m)]
    for c in comps:
        if c.kind == ARC:
            continue
        for d in comps:
            if d.id != c.id:
                # the fiber circle of a spun torus contributes 0 to the span
                alk[c.id + off][d.id + off] = alinking_generator([lk[c.id, d.id], 0])
        if branch:
            alk[c.id + off][0] = abs(c.winding)
    labels = tuple(c.label for c in comps)
    genera = tuple(0 if c.kind == ARC else 1 for c in comps)
    if branch:
        return SurfaceLinkDescriptor((BRANCH_LABEL,) + labels, (0,) + genera, alk, 0)
    return SurfaceLinkDescriptor(labels, genera, alk)


def semi_boundary(desc: SurfaceLinkDescriptor) -> bool:
    return not any(desc.off_diagonal_values() - {0})


def alinking_equivalent(d1: SurfaceLinkDescriptor, d2: SurfaceLinkDescriptor) -> bool:
    return len(d1) == len(d2) and d1.genera == d2.genera and d1.alk == d2.alk


def _signature(desc, i):
    m = len(desc)
    row = tuple(sorted(desc.alk[i][j] for j in range(m) if j != i))
    col = tuple(sorted(desc.alk[j][i] for j in range(m) if j != i))
    return desc.genera[i], row, col


def _refined_step(desc, classes):
    m = len(desc)
    return [
        (classes[i], tuple(sorted(
            (desc.alk[i][j], desc.alk[j][i], classes[j]) for j in range(m) if j != i
        )))
        for i in range(m)
    ]


def weak_alinking_equivalent(d1: SurfaceLinkDescriptor, d2: SurfaceLinkDescriptor):
    """Lexicographically smallest genus-preserving witness, or ``None``.

    The witness ``pi`` satisfies ``alk1[i][j] == alk2[pi[i]][pi[j]]`` for
    all distinct i, j.
    """
    m = len(d1)
    if m != len(d2):
        return None
    if sorted(d1.genera) != sorted(d2.genera):
        return None
    # refine both sides in lockstep so class names stay comparable
    sig1 = [_signature(d1, i) for i in range(m)]
    sig2 = [_signature(d2, i) for i in range(m)]
    if sorted(sig1) != sorted(sig2):
        return None
    names = {key: rank for rank, key in enumerate(sorted(set(sig1)))}
    classes1, classes2 = [names[x] for x in sig1], [names[x] for x in sig2]
    while True:
        n1, n2 = _refined_step(d1, classes1), _refined_step(d2, classes2)
        if sorted(n1) != sorted(n2):
            return None
        stable = len(set(n1)) == len(set(classes1))
        names = {key: rank for rank, key in enumerate(sorted(set(n1)))}
        classes1, classes2 = [names[x] for x in n1], [names[x] for x in n2]
        if stable:
            break

    candidates = [[k for k in range(m) if classes2[k] == classes1[i]] for i in range(m)]
    pi = [-1] * m
    used = [False] * m

    def extend(i):
        if i == m:
            return True
        for k in candidates[i]:
            if used[k]:
                continue
            if all(
                d1.alk[i][j] == d2.alk[k][pi[j]] and d1.alk[j][i] == d2.alk[pi[j]][k]
                for j in range(i)
            ):
                pi[i] = k
                used[k] = True
                if extend(i + 1):
                    return True
                used[k] = False
        pi[i] = -1
        return False

    return tuple(pi) if extend(0) else None


def sublink_descriptor(diagram: Diagram, keep) -> SurfaceLinkDescriptor:
    """Descriptor of the sublink made of the descriptor components in ``keep``.

    Indices refer to :func:`descriptor` order (branch first when present).
    """
    full = descriptor(diagram)
    keep = set(keep)
    if not keep or not keep < set(range(len(full))):
        raise ValueError("a sublink is a proper nonempty subset of the components")
    off = 1 if full.branch_index is not None else 0
    sub = diagram
    if off and 0 not in keep:
        sub = replace(sub, branch_present=False)
    drop = {k - off for k in range(off, len(full)) if k not in keep}
    if drop:
        sub = delete_components(sub, drop)
    return descriptor(sub)
