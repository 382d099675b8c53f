"""
Dyadic decomposition of a chain graph and the Chain^d edge bound built on it.

Points of a chain representation are ranked 0..q-1 by (x, index). A ray covers
a suffix of that ranking, and the suffix is split greedily into aligned blocks
[a*2^j, (a+1)*2^j - 1] over the ranking padded to the next power of two.
"""

from __future__ import annotations

import logging
from bisect import bisect_left, bisect_right
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional

from ..geometry.graph import BipartiteGraph
from ..geometry.representation import ClassTag, Representation, build_graph
from ..utils.errors import InvalidInputError

logger = logging.getLogger("convert.dyadic")


def next_power_of_two(n: int) -> int:
    return 1 if n <= 1 else 1 << (n - 1).bit_length()


def ceil_log2(n: int) -> int:
    return 0 if n <= 1 else (n - 1).bit_length()


@dataclass(frozen=True, order=True)
class DyadicRange:
    lo: int
    hi: int

    def __post_init__(self):
        size = self.hi - self.lo + 1
        if self.lo < 0 or size <= 0 or size & (size - 1) or self.lo % size:
            raise InvalidInputError(f"[{self.lo}, {self.hi}] is not an aligned dyadic range")

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    @property
    def level(self) -> int:
        return self.size.bit_length() - 1

    def __contains__(self, rank: int) -> bool:
        return self.lo <= rank <= self.hi

    def __str__(self):
        return f"[{self.lo},{self.hi}]"


def dyadic_cover(ray_lo: int, n: int) -> List[DyadicRange]:
    """Disjoint aligned ranges covering [ray_lo, N-1], N the padded size, fewest possible"""
    if n <= 0 or not 0 <= ray_lo < n:
        raise InvalidInputError(f"Ray start rank {ray_lo} out of range for {n} points")
    size = next_power_of_two(n)
    cover = []
    pos = ray_lo
    while pos < size:
        step = pos & -pos if pos else size
        while pos + step > size:
            step //= 2
        cover.append(DyadicRange(pos, pos + step - 1))
        pos += step
    return cover


@dataclass(frozen=True)
class DyadicPiece:
    range: DyadicRange
    ray_members: FrozenSet[int]
    point_members: FrozenSet[int]
    graph: BipartiteGraph


def _sides(rep: Representation):
    """(point side name, point objects, ray side name, ray objects)"""
    if rep.orientation()[0] == "point1":
        return "u", rep.u_objects, "v", rep.v_objects
    return "v", rep.v_objects, "u", rep.u_objects


def dyadic_decompose(
    chain_rep: Representation,
    residual: Optional[BipartiteGraph] = None,
) -> List[DyadicPiece]:
    """
    Split the residual edges of a chain representation into dyadic pieces.

    Piece graphs keep the global vertex indices of the chain representation.
    Residual edges the chain does not realize land in no piece. With no
    residual the whole chain graph is decomposed.
    """
    if chain_rep.class_tag is not ClassTag.CHAIN:
        raise InvalidInputError(f"Dyadic decomposition needs a chain representation, got {chain_rep.class_tag.value}")
    chain_graph = build_graph(chain_rep)
    if residual is None:
        residual = chain_graph
    elif (residual.u_count, residual.v_count) != (chain_graph.u_count, chain_graph.v_count):
        raise InvalidInputError("Residual graph does not match the chain representation's vertex counts")

    point_side, points, _, rays = _sides(chain_rep)
    ranked = sorted(range(len(points)), key=lambda i: (points[i].x, i))
    rank_of = {p: r for r, p in enumerate(ranked)}
    xs = [points[p].x for p in ranked]
    q = len(points)

    ray_cover: Dict[DyadicRange, set] = {}
    cover_of: Dict[int, List[DyadicRange]] = {}
    for r, ray in enumerate(rays):
        first = bisect_left(xs, ray.start_x)
        if first >= q:
            continue
        cover_of[r] = dyadic_cover(first, q)
        for block in cover_of[r]:
            ray_cover.setdefault(block, set()).add(r)

    # each realized edge lies in exactly one block of its ray's cover
    grouped: Dict[DyadicRange, set] = defaultdict(set)
    for u, v in residual.edges:
        if not chain_graph.has_edge(u, v):
            continue
        p, r = (u, v) if point_side == "u" else (v, u)
        blocks = cover_of[r]
        rank = rank_of[p]
        grouped[blocks[bisect_right([b.lo for b in blocks], rank) - 1]].add((u, v))

    pieces = []
    for block in sorted(ray_cover):
        pieces.append(DyadicPiece(
            block,
            frozenset(ray_cover[block]),
            frozenset(ranked[block.lo:block.hi + 1]),
            BipartiteGraph(residual.u_count, residual.v_count, frozenset(grouped.get(block, ()))),
        ))
    logger.debug(f"Dyadic decomposition: {q} points, {len(rays)} rays, {len(pieces)} pieces")
    return pieces


def chaind_bound(d: int, m: int, n: int, k: int) -> int:
    """Edge bound for K_{k,k}-free intersections of d chain graphs"""
    if d < 3:
        raise InvalidInputError(f"Chain^d bound needs d >= 3, got {d}")
    if min(m, n) < 0 or k < 1:
        raise InvalidInputError(f"Invalid bound parameters m={m}, n={n}, k={k}")
    levels = max(1, ceil_log2(n))
    return (3 * m + 6 * n) * (k - 1) * levels ** (d - 3)
