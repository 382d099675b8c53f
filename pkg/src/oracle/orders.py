"""
The three strict partial orders on horizontal segments used by the chain³ bound.

s2 succeeds s in
  DL  if min(s2.x) <= min(s.x), max(s2.x) <= max(s.x) and s2.y < s.y
  DR  if min(s.x) <= min(s2.x), max(s.x) <= max(s2.x) and s2.y < s.y
  C   if s2.x is a strict subset of s.x
"""

from __future__ import annotations

from enum import Enum
from typing import FrozenSet, List, Sequence

from ..geometry.objects import HSegment
from ..utils.errors import TieError


class Order(str, Enum):
    DL = "DL"
    DR = "DR"
    C = "C"


ORDERS = (Order.DL, Order.DR, Order.C)


def succeeds(s: HSegment, s2: HSegment, order: Order) -> bool:
    """True iff s2 succeeds s in the given order"""
    if order is Order.DL:
        return s2.x_lo <= s.x_lo and s2.x_hi <= s.x_hi and s2.y < s.y
    if order is Order.DR:
        return s.x_lo <= s2.x_lo and s.x_hi <= s2.x_hi and s2.y < s.y
    return s.x_lo <= s2.x_lo and s2.x_hi <= s.x_hi and (s2.x_lo, s2.x_hi) != (s.x_lo, s.x_hi)


def comparability(s: HSegment, s2: HSegment) -> FrozenSet[Order]:
    """Every order in which s and s2 are comparable, in either direction"""
    if s.y == s2.y:
        if succeeds(s, s2, Order.C) or succeeds(s2, s, Order.C):
            return frozenset({Order.C})
        raise TieError(f"Segments at equal y={s.y} with non-nested x-intervals")
    return frozenset(
        order for order in ORDERS
        if succeeds(s, s2, order) or succeeds(s2, s, order)
    )


def successors(segments: Sequence[HSegment], index: int, order: Order) -> List[int]:
    """Indices of all segments succeeding segments[index] in order"""
    s = segments[index]
    return [j for j, s2 in enumerate(segments) if j != index and succeeds(s, s2, order)]
