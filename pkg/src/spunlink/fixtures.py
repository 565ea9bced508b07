"""Event words for the example links, pinned to their known invariants.

The original links exist only as drawings, so these words are stand-ins with the same
invariants rather than stroke-for-stroke copies; tests and ``spunlink paper``
recheck every pinned value.
"""

from __future__ import annotations

from .diagram import AnnularDiagram, StripDiagram, word
from .errors import NegativeIndex


def fig6_2() -> StripDiagram:
    """A circle J hooked once around a trivial arc K.

    Spun, J is a torus and K a sphere with alk(J, K) = 1, alk(K, J) = 0.
    """
    return StripDiagram(
        word("cup1; ax+; x_over1; x_under2; cap1; ax-"),
        ("J", "K"),
    )


def fig6_2_branched() -> AnnularDiagram:
    """The same link cut open along K: J passes once through the seam."""
    return AnnularDiagram(1, (), True, ("J",))


def family(i: int) -> AnnularDiagram:
    """Branch arc plus one circle whose neighbouring lifts clasp i times.

    The circle crosses the seam once each way, so its winding is 0 and the
    link is semi-boundary; in the p-fold cover consecutive lifts link i
    times and all other pairs are split.
    """
    if i < 0:
        raise NegativeIndex(f"family index must be >= 0, got {i}")
    clasp = "; ".join(["x_over2"] * (2 * i))
    return AnnularDiagram(2, word(f"cup3; {clasp}; cap1"), True, ("K",))


def _main(clasps: int, labels) -> AnnularDiagram:
    # seam strands L1, L2 and the cup R1, R2 belong to the circle; the arc
    # hooks L1 positively and R1 negatively so its base linking is 0
    clasp = "; ".join(["x_over3"] * (2 * clasps))
    text = f"""
        ax+
        cup4
        {clasp}
        x_over1; x_over1
        x_over1; x_over2
        x_under3; x_under3
        x_under2; x_under1
        ax-
        cap1
    """
    return AnnularDiagram(2, word(text), True, labels)


def main_pair() -> tuple[AnnularDiagram, AnnularDiagram]:
    """The pair (L, L') branched along P and P' respectively.

    In the 5-fold covers, L gives alinking numbers in {0, 1} and L' has a
    pair of tori with alinking number 2.
    """
    return _main(1, ("R", "Q")), _main(2, ("R'", "Q'"))


FIXTURES = {
    "fig6_2": fig6_2,
    "fig6_2_branched": fig6_2_branched,
    **{f"family_{i}": (lambda i=i: family(i)) for i in range(5)},
    "main_L": lambda: main_pair()[0],
    "main_Lprime": lambda: main_pair()[1],
}
