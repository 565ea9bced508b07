"""Spun surface-links from Morse event words: invariants, branched covers and a
non-cobordance obstruction."""

from .cover import Lift, LiftProvenance, cover_lift, deck_action
from .diagram import (
    AnnularDiagram,
    ComponentTable,
    Event,
    StripDiagram,
    crossing_count,
    delete_components,
    is_valid,
    linking_matrix,
    trace,
    validate,
    winding,
    word,
)
from .errors import SpunLinkError
from .fileformat import parse, serialize
from .invariants import (
    SurfaceLinkDescriptor,
    alinking_equivalent,
    alinking_generator,
    descriptor,
    semi_boundary,
    sublink_descriptor,
    weak_alinking_equivalent,
)
from .moves import Move, applicable_moves, apply_move, apply_move_tracked
from .obstruction import Verdict, check_preconditions, is_prime_power, obstruct, scan

__all__ = [
    "AnnularDiagram", "ComponentTable", "Event", "Lift", "LiftProvenance", "Move",
    "SpunLinkError", "StripDiagram", "SurfaceLinkDescriptor", "Verdict",
    "alinking_equivalent", "alinking_generator", "applicable_moves", "apply_move",
    "apply_move_tracked", "check_preconditions", "cover_lift", "crossing_count",
    "deck_action", "delete_components", "descriptor", "is_prime_power", "is_valid",
    "linking_matrix", "obstruct", "parse", "scan", "semi_boundary", "serialize",
    "sublink_descriptor", "trace", "validate", "weak_alinking_equivalent", "winding",
    "word",
]
