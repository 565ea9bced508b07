"""Non-cobordance certificates from covering-links.

If two semi-boundary surface-links, each branched along a trivial 2-sphere,
are cobordant, then for every prime power p their p-covering-links are
weakly alinking-equivalent.  So a p at which the covers fail to match is a
proof that the links are not cobordant.  Matching covers prove nothing.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace

from .cover import cover_lift
from .diagram import AnnularDiagram
from .errors import NotAnnular
from .invariants import SurfaceLinkDescriptor, descriptor, semi_boundary, weak_alinking_equivalent

SCAN_DEGREES = (2, 3, 4, 5, 7, 8, 9)

DISTINGUISHED = "distinguished"
INCONCLUSIVE = "inconclusive"

PRECONDITION = "precondition failure"
EQUIVALENT_COVERS = "covers weakly alinking-equivalent"
SHAPE = "trivially distinguished by shape"


def is_prime_power(p: int) -> bool:
    if p < 2:
        return False
    q = 2
    while q * q <= p:
        if p % q == 0:
            while p % q == 0:
                p //= q
            return p == 1
        q += 1
    return True


@dataclass(frozen=True)
class PreconditionReport:
    prime_power_ok: bool
    semi_boundary_A: bool
    semi_boundary_B: bool
    branch_present_A: bool
    branch_present_B: bool
    shape_compatible: bool
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return all((
            self.prime_power_ok,
            self.semi_boundary_A,
            self.semi_boundary_B,
            self.branch_present_A,
            self.branch_present_B,
            self.shape_compatible,
        ))


@dataclass(frozen=True)
class Verdict:
    kind: str
    p: int
    reason: str | None = None
    cover_A: SurfaceLinkDescriptor | None = None
    cover_B: SurfaceLinkDescriptor | None = None
    witness: tuple[int, ...] | None = None
    preconditions: PreconditionReport | None = field(default=None, repr=False)

    @property
    def distinguished(self) -> bool:
        return self.kind == DISTINGUISHED

    def summary(self) -> str:
        if self.distinguished:
            why = "genus multisets of the covers differ" if self.reason == SHAPE else (
                "no genus-preserving permutation matches the cover alinking matrices")
            return f"DISTINGUISHED (p={self.p}): {why}; the links are not cobordant"
        return f"INCONCLUSIVE (p={self.p}): {self.reason}"


def _require_annular(*diagrams):
    for d in diagrams:
        if not getattr(d, "is_annular", False):
            raise NotAnnular("the obstruction needs annular diagrams branched along a trivial arc")


def check_preconditions(A: AnnularDiagram, B: AnnularDiagram, p: int) -> PreconditionReport:
    _require_annular(A, B)
    dA, dB = descriptor(A), descriptor(B)
    notes = []
    prime = is_prime_power(p)
    if not prime:
        notes.append(f"p={p} is not a prime power")
    sbA, sbB = semi_boundary(dA), semi_boundary(dB)
    for name, ok in (("A", sbA), ("B", sbB)):
        if not ok:
            notes.append(f"{name} is not semi-boundary (some alinking number is nonzero)")
    for name, d in (("A", A), ("B", B)):
        if not d.branch_present:
            notes.append(f"{name} has no branch component")
    shape = len(dA) == len(dB) and Counter(dA.genera) == Counter(dB.genera)
    if not shape:
        notes.append("component counts or genus multisets differ")
    return PreconditionReport(prime, sbA, sbB, A.branch_present, B.branch_present, shape, tuple(notes))


def obstruct(A: AnnularDiagram, B: AnnularDiagram, p: int) -> Verdict:
    report = check_preconditions(A, B, p)
    if not report.ok:
        only_shape = replace(report, shape_compatible=True).ok
        reason = SHAPE if only_shape else PRECONDITION
        detail = "; ".join(report.notes)
        return Verdict(INCONCLUSIVE, p, f"{reason}: {detail}", preconditions=report)
    cA = descriptor(cover_lift(A, p)[0])
    cB = descriptor(cover_lift(B, p)[0])
    if Counter(cA.genera) != Counter(cB.genera):
        return Verdict(DISTINGUISHED, p, SHAPE, cA, cB, preconditions=report)
    witness = weak_alinking_equivalent(cA, cB)
    if witness is None:
        return Verdict(DISTINGUISHED, p, None, cA, cB, preconditions=report)
    return Verdict(INCONCLUSIVE, p, EQUIVALENT_COVERS, cA, cB, witness, report)


def scan(A: AnnularDiagram, B: AnnularDiagram, degrees=SCAN_DEGREES) -> Verdict:
    """First distinguishing degree in ``degrees``, else the last verdict."""
    verdict = None
    for p in degrees:
        verdict = obstruct(A, B, p)
        if verdict.distinguished:
            return verdict
    return verdict
