from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from .graph import BipartiteGraph
from .objects import contains, intersects
from ..utils.errors import InvalidInputError

logger = logging.getLogger("geometry")


class ClassTag(str, Enum):
    CHAIN = "chain"
    CONV = "conv"
    INTERVAL_CONTAINMENT = "interval_containment"
    SR = "sr"
    GIG = "gig"
    PRIG = "prig"
    CHAIN3_BRC = "chain3_brc"


# Allowed (u kind, v kind) orientations per class. The first is the normal form.
ORIENTATIONS = {
    ClassTag.CHAIN: [("point1", "rray"), ("rray", "point1")],
    ClassTag.CONV: [("interval", "point1"), ("point1", "interval")],
    ClassTag.INTERVAL_CONTAINMENT: [("interval", "interval")],
    ClassTag.SR: [("hseg", "uray")],
    ClassTag.GIG: [("hseg", "vseg")],
    ClassTag.PRIG: [("point2", "rect"), ("rect", "point2")],
    ClassTag.CHAIN3_BRC: [("hseg", "brect")],
}

CONTAINMENT_CLASSES = {ClassTag.CONV, ClassTag.INTERVAL_CONTAINMENT, ClassTag.CHAIN3_BRC}


@dataclass(frozen=True)
class Violation:
    rule: str
    side: Optional[str]
    index: Optional[int]
    detail: str

    def __str__(self):
        where = f"{self.side}[{self.index}]" if self.side is not None else "representation"
        return f"{self.rule} at {where}: {self.detail}"


@dataclass(frozen=True)
class Representation:
    class_tag: ClassTag
    u_objects: Tuple = ()
    v_objects: Tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "class_tag", ClassTag(self.class_tag))
        object.__setattr__(self, "u_objects", tuple(self.u_objects))
        object.__setattr__(self, "v_objects", tuple(self.v_objects))

    @property
    def u_count(self):
        return len(self.u_objects)

    @property
    def v_count(self):
        return len(self.v_objects)

    def orientation(self) -> Tuple[str, str]:
        """The (u kind, v kind) pair this representation uses"""
        options = ORIENTATIONS[self.class_tag]
        for u_kind, v_kind in options:
            if all(o.kind == u_kind for o in self.u_objects) and all(o.kind == v_kind for o in self.v_objects):
                return u_kind, v_kind
        # Best effort: orientation matching the first object
        for u_kind, v_kind in options:
            if self.u_objects and self.u_objects[0].kind == u_kind:
                return u_kind, v_kind
            if not self.u_objects and self.v_objects and self.v_objects[0].kind == v_kind:
                return u_kind, v_kind
        return options[0]

    def swapped(self) -> "Representation":
        """Exchange the U and V sides (only meaningful for symmetric relations)"""
        return Representation(self.class_tag, self.v_objects, self.u_objects)


def validate_representation(rep: Representation) -> List[Violation]:
    """Every broken Representation invariant, empty when the representation is valid"""
    violations = []
    u_kind, v_kind = rep.orientation()

    for side, objects, expected in (("u", rep.u_objects, u_kind), ("v", rep.v_objects, v_kind)):
        for index, obj in enumerate(objects):
            kind = getattr(obj, "kind", type(obj).__name__)
            if kind != expected:
                violations.append(Violation(
                    "kind-mismatch", side, index,
                    f"{rep.class_tag.value} expects {expected} on side {side}, got {kind}",
                ))

    if rep.class_tag is ClassTag.CHAIN3_BRC:
        seen = {}
        for index, obj in enumerate(rep.u_objects):
            y = getattr(obj, "y", None)
            if y is None:
                continue
            if y in seen:
                violations.append(Violation(
                    "duplicate-y", "u", index,
                    f"segment shares y={y} with u[{seen[y]}]",
                ))
            else:
                seen[y] = index

    return violations


def relation(rep: Representation):
    """Edge predicate (u object, v object) -> bool for the representation's class"""
    tag = rep.class_tag
    if tag is ClassTag.CONV:
        u_kind, _ = rep.orientation()
        if u_kind == "interval":
            return lambda a, b: contains(a, b)
        return lambda a, b: contains(b, a)
    if tag in (ClassTag.INTERVAL_CONTAINMENT, ClassTag.CHAIN3_BRC):
        return lambda a, b: contains(b, a)
    return intersects


def build_graph(rep: Representation) -> BipartiteGraph:
    """The bipartite graph the representation defines"""
    violations = validate_representation(rep)
    if violations:
        raise InvalidInputError(
            f"Invalid {rep.class_tag.value} representation: {violations[0]}"
            + (f" (+{len(violations) - 1} more)" if len(violations) > 1 else ""),
            violations,
        )
    edge_holds = relation(rep)
    edges = {
        (i, j)
        for i, a in enumerate(rep.u_objects)
        for j, b in enumerate(rep.v_objects)
        if edge_holds(a, b)
    }
    logger.debug(f"Built {rep.class_tag.value} graph: {rep.u_count}+{rep.v_count} vertices, {len(edges)} edges")
    return BipartiteGraph(rep.u_count, rep.v_count, frozenset(edges))
