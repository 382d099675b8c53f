"""
Segment / bottomless-rectangle containment as the intersection of an interval
containment graph (x-projections) and a chain graph (y-projections).

The y-factor stores a bottomless rectangle (-inf, y_top] as the rightward ray
[-y_top, +inf) and a segment height y as the point -y, so that y <= y_top
becomes -y >= -y_top.
"""

from __future__ import annotations

import logging
from typing import List, Sequence, Tuple

from .chain import points_on_u
from ..geometry.objects import BottomlessRect, HSegment, Interval, Point1, RightRay
from ..geometry.representation import ClassTag, Representation, validate_representation
from ..utils.errors import InvalidInputError

logger = logging.getLogger("convert.chain3")


def _require(rep: Representation, tag: ClassTag):
    if rep.class_tag is not tag:
        raise InvalidInputError(f"Expected a {tag.value} representation, got {rep.class_tag.value}")
    violations = validate_representation(rep)
    if violations:
        raise InvalidInputError(f"Invalid {tag.value} representation: {violations[0]}", violations)


def rerank_heights(heights: Sequence[int], tops: Sequence[int]) -> Tuple[List[int], List[int]]:
    """
    Integer coordinates with pairwise distinct segment heights that keep every
    comparison height <= top. Equal heights are separated stably by index.
    """
    if len(set(heights)) == len(heights):
        return list(heights), list(tops)
    events = sorted(
        [(y, 0, i) for i, y in enumerate(heights)] + [(t, 1, j) for j, t in enumerate(tops)]
    )
    new_heights, new_tops = list(heights), list(tops)
    for position, (_, kind, index) in enumerate(events):
        if kind == 0:
            new_heights[index] = position
        else:
            new_tops[index] = position
    logger.debug(f"Re-ranked {len(heights)} segment heights to make them distinct")
    return new_heights, new_tops


def chain3_projections(rep: Representation) -> Tuple[Representation, Representation]:
    """(interval containment x-factor, chain y-factor) whose intersection is the graph of rep"""
    _require(rep, ClassTag.CHAIN3_BRC)
    x_rep = Representation(
        ClassTag.INTERVAL_CONTAINMENT,
        [Interval(s.x_lo, s.x_hi) for s in rep.u_objects],
        [Interval(b.x_lo, b.x_hi) for b in rep.v_objects],
    )
    y_rep = Representation(
        ClassTag.CHAIN,
        [Point1(-s.y) for s in rep.u_objects],
        [RightRay(-b.y_top) for b in rep.v_objects],
    )
    return x_rep, y_rep


def assemble_chain3(x_rep: Representation, y_rep: Representation) -> Representation:
    """The segment / bottomless-rectangle representation of the intersection of the two factors"""
    _require(x_rep, ClassTag.INTERVAL_CONTAINMENT)
    _require(y_rep, ClassTag.CHAIN)
    if (x_rep.u_count, x_rep.v_count) != (y_rep.u_count, y_rep.v_count):
        raise InvalidInputError(
            f"Factor sizes differ: {x_rep.u_count}+{x_rep.v_count} vs {y_rep.u_count}+{y_rep.v_count}"
        )
    y_rep = points_on_u(y_rep)
    if y_rep.orientation() != ("point1", "rray"):
        raise InvalidInputError("Chain factor could not be oriented with points on U")

    heights, tops = rerank_heights(
        [-p.x for p in y_rep.u_objects],
        [-r.start_x for r in y_rep.v_objects],
    )
    return Representation(
        ClassTag.CHAIN3_BRC,
        [HSegment(iv.lo, iv.hi, y) for iv, y in zip(x_rep.u_objects, heights)],
        [BottomlessRect(iv.lo, iv.hi, top) for iv, top in zip(x_rep.v_objects, tops)],
    )
