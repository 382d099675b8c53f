"""
Seeded random representations for every class. Coordinates are uniform
integers in [0, 4(m+n)]; the same (class, m, n, seed) always yields the same
instance.
"""

from __future__ import annotations

import random
from typing import Callable, Dict, List

from ..geometry.objects import (
    BottomlessRect, HSegment, Interval, Point1, Point2, Rect, RightRay, UpRay, VSegment,
)
from ..geometry.representation import ClassTag, Representation
from ..utils.errors import InvalidInputError


def coordinate_box(m: int, n: int) -> int:
    return 4 * (m + n)


def _span(rng: random.Random, box: int):
    a, b = rng.randint(0, box), rng.randint(0, box)
    return min(a, b), max(a, b)


def _even_span(rng: random.Random, box: int):
    a, b = rng.randrange(0, box + 1, 2), rng.randrange(0, box + 1, 2)
    return min(a, b), max(a, b)


def _distinct_odd(rng: random.Random, box: int, count: int) -> List[int]:
    return rng.sample(range(1, box + 1, 2), count)


def _chain(rng, m, n, box):
    return [Point1(rng.randint(0, box)) for _ in range(m)], [RightRay(rng.randint(0, box)) for _ in range(n)]


def _conv(rng, m, n, box):
    return [Interval(*_span(rng, box)) for _ in range(m)], [Point1(rng.randint(0, box)) for _ in range(n)]


def _interval_containment(rng, m, n, box):
    return [Interval(*_span(rng, box)) for _ in range(m)], [Interval(*_span(rng, box)) for _ in range(n)]


def _sr(rng, m, n, box):
    segments = [HSegment(*_span(rng, box), rng.randint(0, box)) for _ in range(m)]
    rays = [UpRay(rng.randint(0, box), rng.randint(0, box)) for _ in range(n)]
    return segments, rays


def _gig(rng, m, n, box):
    # horizontals: distinct odd y, even x endpoints; verticals: distinct odd x, even y endpoints
    ys = _distinct_odd(rng, box, m)
    xs = _distinct_odd(rng, box, n)
    horizontals = [HSegment(*_even_span(rng, box), y) for y in ys]
    verticals = [VSegment(x, *_even_span(rng, box)) for x in xs]
    return horizontals, verticals


def _prig(rng, m, n, box):
    points = [Point2(rng.randint(0, box), rng.randint(0, box)) for _ in range(m)]
    rects = [Rect(*_span(rng, box), *_span(rng, box)) for _ in range(n)]
    return points, rects


def _chain3(rng, m, n, box):
    # segment heights distinct and odd, rectangle tops even
    ys = _distinct_odd(rng, box, m)
    segments = [HSegment(*_span(rng, box), y) for y in ys]
    rects = [BottomlessRect(*_span(rng, box), rng.randrange(0, box + 1, 2)) for _ in range(n)]
    return segments, rects


_SAMPLERS: Dict[ClassTag, Callable] = {
    ClassTag.CHAIN: _chain,
    ClassTag.CONV: _conv,
    ClassTag.INTERVAL_CONTAINMENT: _interval_containment,
    ClassTag.SR: _sr,
    ClassTag.GIG: _gig,
    ClassTag.PRIG: _prig,
    ClassTag.CHAIN3_BRC: _chain3,
}


def random_representation(klass, m: int, n: int, seed: int) -> Representation:
    """Random representation of class klass with m objects on U and n on V"""
    if m < 0 or n < 0:
        raise InvalidInputError(f"Vertex counts must be non-negative, got m={m}, n={n}")
    try:
        tag = ClassTag(klass)
    except ValueError:
        raise InvalidInputError(f"Unknown class {klass!r}") from None
    rng = random.Random(seed)
    u_objects, v_objects = _SAMPLERS[tag](rng, m, n, coordinate_box(m, n))
    return Representation(tag, u_objects, v_objects)
