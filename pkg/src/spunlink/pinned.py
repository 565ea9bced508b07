"""Pinned regression checks for the example links, grouped by case."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .cover import cover_lift, deck_action
from .fixtures import family, fig6_2, fig6_2_branched, main_pair
from .invariants import descriptor, semi_boundary, sublink_descriptor, weak_alinking_equivalent
from .obstruction import check_preconditions, obstruct

CASES = ("fig6.2", "family", "main")


@dataclass(frozen=True)
class Check:
    case: str
    name: str
    expected: object
    computed: object

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


def _deck_equivariant(desc, prov) -> bool:
    m = len(desc)
    for k in range(prov.p):
        g = deck_action(prov, k)
        if any(desc.alk[i][j] != desc.alk[g[i]][g[j]] for i in range(m) for j in range(m)):
            return False
    return True


def fig6_2_checks() -> list[Check]:
    d = descriptor(fig6_2())
    j, k = d.labels.index("J"), d.labels.index("K")
    return [
        Check("fig6.2", "genera (J, K)", (1, 0), (d.genera[j], d.genera[k])),
        Check("fig6.2", "alk(J, K)", 1, d.alk[j][k]),
        Check("fig6.2", "alk(K, J)", 0, d.alk[k][j]),
        Check("fig6.2", "semi-boundary", False, semi_boundary(d)),
        Check("fig6.2", "semi-boundary with K as branch", False,
              check_preconditions(fig6_2_branched(), fig6_2_branched(), 5).semi_boundary_A),
    ]


def family_checks(indices=range(5), degrees=(3, 5), p_obstruct=5) -> list[Check]:
    out = []
    for i in indices:
        d = descriptor(family(i))
        out.append(Check("family", f"i={i}: semi-boundary", True, semi_boundary(d)))
        for p in degrees:
            lifted, prov = cover_lift(family(i), p)
            c = descriptor(lifted)
            out.append(Check("family", f"i={i} p={p}: torus count", p, c.genera.count(1)))
            out.append(Check("family", f"i={i} p={p}: values within {{0,{i}}}", True,
                             c.off_diagonal_values() <= {0, i}))
            adjacent = {c.alk[a][(a + 1) % p] for a in range(p)} if p >= 3 else {i}
            out.append(Check("family", f"i={i} p={p}: neighbours link {i}", {i}, adjacent))
            out.append(Check("family", f"i={i} p={p}: deck-equivariant", True,
                             _deck_equivariant(c, prov)))
    for i, j in permutations(indices, 2):
        v = obstruct(family(i), family(j), p_obstruct)
        out.append(Check("family", f"obstruct({i}, {j}) at p={p_obstruct}", "distinguished", v.kind))
    return out


def main_checks(p=5) -> list[Check]:
    L, Lp = main_pair()
    out = []
    for name, d in (("L", L), ("L'", Lp)):
        full = descriptor(d)
        for a, b in permutations(range(len(full)), 2):
            sub = sublink_descriptor(d, {a, b})
            ia, ib = sub.labels.index(full.labels[a]), sub.labels.index(full.labels[b])
            out.append(Check("main", f"{name}: alk({full.labels[a]}, {full.labels[b]}) in sublink",
                             0, sub.alk[ia][ib]))
    cL = descriptor(cover_lift(L, p)[0])
    cLp = descriptor(cover_lift(Lp, p)[0])
    out.append(Check("main", f"p={p}: cover of L values within {{0,1}}", True,
                     cL.off_diagonal_values() <= {0, 1}))
    out.append(Check("main", f"p={p}: cover of L' has a 2", True, 2 in cLp.off_diagonal_values()))
    out.append(Check("main", f"p={p}: weak witness", None, weak_alinking_equivalent(cL, cLp)))
    out.append(Check("main", f"p={p}: obstruct(L, L')", "distinguished", obstruct(L, Lp, p).kind))
    return out


def run(case: str = "all") -> list[Check]:
    groups = {"fig6.2": fig6_2_checks, "family": family_checks, "main": main_checks}
    if case == "all":
        return [c for name in CASES for c in groups[name]()]
    return groups[case]()
