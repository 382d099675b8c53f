"""
Lower-bound instances: the chain construction, the unit grid construction,
the duplication amplifier and a complete grid used as a positive control.
"""

from __future__ import annotations

import logging
from math import isqrt
from typing import Tuple

from ..convert.chain3 import rerank_heights
from ..geometry.objects import BottomlessRect, HSegment, Point1, RightRay, VSegment
from ..geometry.representation import ClassTag, Representation
from ..utils.errors import InvalidInputError

logger = logging.getLogger("construct")


def chain_lower_bound(m: int, n: int, k: int) -> Representation:
    """
    K_{k,k}-free chain graph with (n+m)(k-1) - (k-1)^2 edges.

    U holds m points at x = 2i. The first k-1 rays start at 0 and see every
    point; the other n-k+1 rays start just after point m-k+1 and see the last
    k-1 points.
    """
    if not m >= k >= 1 or n < k - 1:
        raise InvalidInputError(f"chain_lower_bound needs m >= k >= 1 and n >= k-1, got m={m}, n={n}, k={k}")
    points = [Point1(2 * i) for i in range(1, m + 1)]
    late = 2 * (m - k + 1) + 1
    rays = [RightRay(0)] * (k - 1) + [RightRay(late)] * (n - k + 1)
    return Representation(ClassTag.CHAIN, points, rays)


def ugig_construction(t: int) -> Representation:
    """K_{2,2}-free unit grid instance with 4t^2 segments per side and 12t^2 - 4t edges"""
    if t < 1:
        raise InvalidInputError(f"ugig_construction needs t >= 1, got {t}")
    horizontals = []
    for i in range(t):
        for j in range(2 * t):
            horizontals.append(HSegment(8 * i, 8 * i + 7, 4 * j + 1))
            horizontals.append(HSegment(8 * i - 4, 8 * i + 3, 4 * j + 3))
    verticals = []
    for i in range(t):
        for j in range(t):
            verticals.append(VSegment(8 * j + 1, 8 * i + 2, 8 * i + 8))
            verticals.append(VSegment(8 * j + 2, 8 * i - 2, 8 * i + 4))
            verticals.append(VSegment(8 * j + 5, 8 * i, 8 * i + 6))
            verticals.append(VSegment(8 * j + 6, 8 * i + 4, 8 * i + 10))
    return Representation(ClassTag.GIG, horizontals, verticals)


def ugig_edge_margin(t: int, k: int) -> Tuple[int, int]:
    """
    (edges, threshold) for the duplicated unit grid instance, with
    threshold = (k-1)(3n - 2*sqrt((k-1)n)) and n = 4(k-1)t^2.
    """
    if t < 1 or k < 2:
        raise InvalidInputError(f"ugig_edge_margin needs t >= 1 and k >= 2, got t={t}, k={k}")
    n = 4 * (k - 1) * t * t
    root = isqrt((k - 1) * n)
    if root * root != (k - 1) * n:
        raise InvalidInputError(f"(k-1)n = {(k - 1) * n} is not a perfect square")
    edges = (k - 1) ** 2 * (12 * t * t - 4 * t)
    return edges, (k - 1) * (3 * n - 2 * root)


def complete_grid(m: int, n: int) -> Representation:
    """GIG realizing K_{m,n}: every horizontal crosses every vertical"""
    if m < 0 or n < 0:
        raise InvalidInputError(f"complete_grid needs m, n >= 0, got m={m}, n={n}")
    return Representation(
        ClassTag.GIG,
        [HSegment(0, n + 1, y) for y in range(1, m + 1)],
        [VSegment(x, 0, m + 1) for x in range(1, n + 1)],
    )


def duplicate(rep: Representation, k: int) -> Representation:
    """Each object replaced by k-1 copies in a contiguous index block"""
    if k < 2:
        raise InvalidInputError(f"duplicate needs k >= 2, got {k}")
    copies = k - 1
    u_objects = [obj for obj in rep.u_objects for _ in range(copies)]
    v_objects = [obj for obj in rep.v_objects for _ in range(copies)]

    if rep.class_tag is ClassTag.CHAIN3_BRC and copies > 1:
        heights, tops = rerank_heights([s.y for s in u_objects], [b.y_top for b in v_objects])
        u_objects = [HSegment(s.x_lo, s.x_hi, y) for s, y in zip(u_objects, heights)]
        v_objects = [BottomlessRect(b.x_lo, b.x_hi, top) for b, top in zip(v_objects, tops)]

    logger.debug(f"Duplicated {rep.class_tag.value} representation {copies}x")
    return Representation(rep.class_tag, u_objects, v_objects)
