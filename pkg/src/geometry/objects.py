"""
Geometric primitives with exact integer coordinates.

Every object reduces to a closed box: one closed range per axis, where None
stands for an unbounded side. Intersection and containment are evaluated on
those boxes, so endpoint touching always counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from ..utils.errors import InvalidInputError

# (lo, hi); None means -inf for lo and +inf for hi
Range = Tuple[Optional[int], Optional[int]]


def _check_order(kind, lo, hi):
    if lo > hi:
        raise InvalidInputError(f"{kind}: lo={lo} exceeds hi={hi}")


def _check_ints(kind, *values):
    for value in values:
        if isinstance(value, bool) or not isinstance(value, int):
            raise InvalidInputError(f"{kind}: coordinate {value!r} is not an integer")


@dataclass(frozen=True)
class Point1:
    x: int
    kind = "point1"
    dimension = 1

    def __post_init__(self):
        _check_ints(self.kind, self.x)

    def box(self):
        return ((self.x, self.x),)


@dataclass(frozen=True)
class RightRay:
    start_x: int
    kind = "rray"
    dimension = 1

    def __post_init__(self):
        _check_ints(self.kind, self.start_x)

    def box(self):
        return ((self.start_x, None),)


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int
    kind = "interval"
    dimension = 1

    def __post_init__(self):
        _check_ints(self.kind, self.lo, self.hi)
        _check_order(self.kind, self.lo, self.hi)

    def box(self):
        return ((self.lo, self.hi),)


@dataclass(frozen=True)
class Point2:
    x: int
    y: int
    kind = "point2"
    dimension = 2

    def __post_init__(self):
        _check_ints(self.kind, self.x, self.y)

    def box(self):
        return ((self.x, self.x), (self.y, self.y))


@dataclass(frozen=True)
class UpRay:
    x: int
    start_y: int
    kind = "uray"
    dimension = 2

    def __post_init__(self):
        _check_ints(self.kind, self.x, self.start_y)

    def box(self):
        return ((self.x, self.x), (self.start_y, None))


@dataclass(frozen=True)
class HSegment:
    x_lo: int
    x_hi: int
    y: int
    kind = "hseg"
    dimension = 2

    def __post_init__(self):
        _check_ints(self.kind, self.x_lo, self.x_hi, self.y)
        _check_order(self.kind, self.x_lo, self.x_hi)

    def box(self):
        return ((self.x_lo, self.x_hi), (self.y, self.y))


@dataclass(frozen=True)
class VSegment:
    x: int
    y_lo: int
    y_hi: int
    kind = "vseg"
    dimension = 2

    def __post_init__(self):
        _check_ints(self.kind, self.x, self.y_lo, self.y_hi)
        _check_order(self.kind, self.y_lo, self.y_hi)

    def box(self):
        return ((self.x, self.x), (self.y_lo, self.y_hi))


@dataclass(frozen=True)
class BottomlessRect:
    x_lo: int
    x_hi: int
    y_top: int
    kind = "brect"
    dimension = 2

    def __post_init__(self):
        _check_ints(self.kind, self.x_lo, self.x_hi, self.y_top)
        _check_order(self.kind, self.x_lo, self.x_hi)

    def box(self):
        return ((self.x_lo, self.x_hi), (None, self.y_top))


@dataclass(frozen=True)
class Rect:
    x_lo: int
    x_hi: int
    y_lo: int
    y_hi: int
    kind = "rect"
    dimension = 2

    def __post_init__(self):
        _check_ints(self.kind, self.x_lo, self.x_hi, self.y_lo, self.y_hi)
        _check_order(self.kind, self.x_lo, self.x_hi)
        _check_order(self.kind, self.y_lo, self.y_hi)

    def box(self):
        return ((self.x_lo, self.x_hi), (self.y_lo, self.y_hi))


GeomObject = Union[Point1, RightRay, Interval, Point2, UpRay, HSegment, VSegment, BottomlessRect, Rect]

OBJECT_TYPES = {
    cls.kind: cls
    for cls in (Point1, RightRay, Interval, Point2, UpRay, HSegment, VSegment, BottomlessRect, Rect)
}

# (outer kind, inner kind) pairs for which contains() is defined
CONTAINMENT_PAIRS = frozenset({
    ("interval", "point1"),
    ("interval", "interval"),
    ("rray", "point1"),
    ("brect", "hseg"),
    ("rect", "point2"),
    ("uray", "point2"),
    # y-projection of an upward ray against a height
    ("uray", "point1"),
})


def x_range(obj) -> Range:
    """Projection to the x-axis"""
    return obj.box()[0]


def y_range(obj) -> Range:
    """Projection to the y-axis (2D objects only)"""
    if obj.dimension != 2:
        raise InvalidInputError(f"{obj.kind} has no y projection")
    return obj.box()[1]


def _overlap(a: Range, b: Range) -> bool:
    a_lo, a_hi = a
    b_lo, b_hi = b
    if a_hi is not None and b_lo is not None and a_hi < b_lo:
        return False
    if b_hi is not None and a_lo is not None and b_hi < a_lo:
        return False
    return True


def _covers(outer: Range, inner: Range) -> bool:
    o_lo, o_hi = outer
    i_lo, i_hi = inner
    if o_lo is not None and (i_lo is None or i_lo < o_lo):
        return False
    if o_hi is not None and (i_hi is None or i_hi > o_hi):
        return False
    return True


def intersects(a, b) -> bool:
    """True iff the closed point sets of a and b share a point"""
    if a.dimension != b.dimension:
        raise InvalidInputError(f"Dimension mismatch: {a.kind} is {a.dimension}D, {b.kind} is {b.dimension}D")
    return all(_overlap(ra, rb) for ra, rb in zip(a.box(), b.box()))


def contains(outer, inner) -> bool:
    """True iff every point of inner lies in outer"""
    if (outer.kind, inner.kind) not in CONTAINMENT_PAIRS:
        raise InvalidInputError(f"Containment of {inner.kind} in {outer.kind} is not defined")
    if inner.dimension != outer.dimension:
        return _covers(y_range(outer), inner.box()[0])
    return all(_covers(ro, ri) for ro, ri in zip(outer.box(), inner.box()))
