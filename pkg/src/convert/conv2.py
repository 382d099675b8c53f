"""
Graphs that are intersections of two convex graphs over a shared labeled
vertex universe, and their split into a point/rectangle part and a
horizontal/vertical segment part.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import FrozenSet, Hashable, Set, Tuple

from ..geometry.objects import HSegment, Interval, Point1, Point2, Rect, VSegment
from ..geometry.representation import ClassTag, Representation, build_graph
from ..utils.errors import InvalidInputError

logger = logging.getLogger("convert.conv2")

Label = Hashable


@dataclass(frozen=True)
class ConvFactor:
    """A convex representation whose vertices carry labels from a shared universe"""

    rep: Representation
    u_labels: Tuple[Label, ...]
    v_labels: Tuple[Label, ...]

    def __post_init__(self):
        object.__setattr__(self, "u_labels", tuple(self.u_labels))
        object.__setattr__(self, "v_labels", tuple(self.v_labels))
        if self.rep.class_tag is not ClassTag.CONV:
            raise InvalidInputError(f"Convex factor needs a conv representation, got {self.rep.class_tag.value}")
        if (len(self.u_labels), len(self.v_labels)) != (self.rep.u_count, self.rep.v_count):
            raise InvalidInputError("Label counts do not match the representation")
        labels = self.u_labels + self.v_labels
        if len(set(labels)) != len(labels):
            raise InvalidInputError("Vertex labels must be unique within a factor")

    @property
    def labels(self) -> FrozenSet[Label]:
        return frozenset(self.u_labels + self.v_labels)

    def normalized(self) -> "ConvFactor":
        """Same factor with the intervals on U and the points on V"""
        if self.rep.orientation()[0] == "interval":
            return self
        return ConvFactor(self.rep.swapped(), self.v_labels, self.u_labels)

    def labeled_edges(self) -> Set[FrozenSet[Label]]:
        return labeled_edges(self.rep, self.u_labels, self.v_labels)


def labeled_edges(rep: Representation, u_labels, v_labels) -> Set[FrozenSet[Label]]:
    graph = build_graph(rep)
    return {frozenset((u_labels[u], v_labels[v])) for u, v in graph.edges}


@dataclass(frozen=True)
class Conv2Decomposition:
    prig: Representation
    prig_u_labels: Tuple[Label, ...]
    prig_v_labels: Tuple[Label, ...]
    gig: Representation
    gig_u_labels: Tuple[Label, ...]
    gig_v_labels: Tuple[Label, ...]

    def labeled_edges(self) -> Set[FrozenSet[Label]]:
        return (
            labeled_edges(self.prig, self.prig_u_labels, self.prig_v_labels)
            | labeled_edges(self.gig, self.gig_u_labels, self.gig_v_labels)
        )


def conv2_decompose(first: ConvFactor, second: ConvFactor) -> Conv2Decomposition:
    """
    Split the intersection of two convex graphs into a PRIG and a GIG.

    With g1 = first and g2 = second, vertices that are intervals in both
    factors become rectangles, points in both become 2D points, intervals of g1
    that are points of g2 become horizontal segments and the remaining
    vertices become vertical segments.
    """
    if first.labels != second.labels:
        raise InvalidInputError("Convex factors are over different vertex universes")
    g1, g2 = first.normalized(), second.normalized()

    order = g1.u_labels + g1.v_labels
    interval1 = dict(zip(g1.u_labels, g1.rep.u_objects))
    point1 = dict(zip(g1.v_labels, g1.rep.v_objects))
    interval2 = dict(zip(g2.u_labels, g2.rep.u_objects))
    point2 = dict(zip(g2.v_labels, g2.rep.v_objects))

    rects = [a for a in order if a in interval1 and a in interval2]
    points = [b for b in order if b in point1 and b in point2]
    horizontals = [a for a in order if a in interval1 and a in point2]
    verticals = [b for b in order if b in point1 and b in interval2]

    prig = Representation(
        ClassTag.PRIG,
        [Point2(point1[b].x, point2[b].x) for b in points],
        [Rect(interval1[a].lo, interval1[a].hi, interval2[a].lo, interval2[a].hi) for a in rects],
    )
    gig = Representation(
        ClassTag.GIG,
        [HSegment(interval1[a].lo, interval1[a].hi, point2[a].x) for a in horizontals],
        [VSegment(point1[b].x, interval2[b].lo, interval2[b].hi) for b in verticals],
    )
    logger.debug(
        f"conv2 split: {len(points)} points, {len(rects)} rectangles, "
        f"{len(horizontals)} horizontals, {len(verticals)} verticals"
    )
    return Conv2Decomposition(
        prig, tuple(points), tuple(rects),
        gig, tuple(horizontals), tuple(verticals),
    )


def _default_labels(rep: Representation):
    return tuple(f"u{i}" for i in range(rep.u_count)), tuple(f"v{j}" for j in range(rep.v_count))


def prig_to_conv2(rep: Representation) -> Tuple[ConvFactor, ConvFactor]:
    """x- and y-projection factors of a point/rectangle intersection representation"""
    if rep.class_tag is not ClassTag.PRIG:
        raise InvalidInputError(f"Expected a prig representation, got {rep.class_tag.value}")
    build_graph(rep)
    u_labels, v_labels = _default_labels(rep)
    if rep.orientation()[0] == "point2":
        point_labels, points, rect_labels, rects = u_labels, rep.u_objects, v_labels, rep.v_objects
    else:
        point_labels, points, rect_labels, rects = v_labels, rep.v_objects, u_labels, rep.u_objects
    x_factor = ConvFactor(
        Representation(ClassTag.CONV, [Interval(r.x_lo, r.x_hi) for r in rects], [Point1(p.x) for p in points]),
        rect_labels, point_labels,
    )
    y_factor = ConvFactor(
        Representation(ClassTag.CONV, [Interval(r.y_lo, r.y_hi) for r in rects], [Point1(p.y) for p in points]),
        rect_labels, point_labels,
    )
    return x_factor, y_factor


def gig_to_conv2(rep: Representation) -> Tuple[ConvFactor, ConvFactor]:
    """x- and y-projection factors of a grid intersection representation"""
    if rep.class_tag is not ClassTag.GIG:
        raise InvalidInputError(f"Expected a gig representation, got {rep.class_tag.value}")
    build_graph(rep)
    u_labels, v_labels = _default_labels(rep)
    x_factor = ConvFactor(
        Representation(
            ClassTag.CONV,
            [Interval(h.x_lo, h.x_hi) for h in rep.u_objects],
            [Point1(v.x) for v in rep.v_objects],
        ),
        u_labels, v_labels,
    )
    y_factor = ConvFactor(
        Representation(
            ClassTag.CONV,
            [Interval(v.y_lo, v.y_hi) for v in rep.v_objects],
            [Point1(h.y) for h in rep.u_objects],
        ),
        v_labels, u_labels,
    )
    return x_factor, y_factor


def conv2_graph(first: ConvFactor, second: ConvFactor) -> Set[FrozenSet[Label]]:
    """Labeled edge set of the intersection of two convex factors"""
    if first.labels != second.labels:
        raise InvalidInputError("Convex factors are over different vertex universes")
    return first.labeled_edges() & second.labeled_edges()
