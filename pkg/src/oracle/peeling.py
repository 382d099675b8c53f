"""
Minimum-degree peeling and elimination certificates.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from typing import Optional, Set, Tuple

from ..geometry.graph import BipartiteGraph, Vertex

logger = logging.getLogger("oracle.peeling")

_SIDE_RANK = {"u": 0, "v": 1}


@dataclass(frozen=True)
class EliminationCertificate:
    steps: Tuple[Tuple[Vertex, int], ...]
    claimed_degeneracy: int

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple((tuple(v), int(d)) for v, d in self.steps))

    @property
    def max_degree(self):
        return max((d for _, d in self.steps), default=0)


def peel(g: BipartiteGraph, threshold: Optional[int] = None):
    """
    Repeatedly remove a minimum-degree vertex (ties: U before V, then lowest index).

    Stops early once the minimum degree exceeds threshold. Returns the steps
    taken and the set of vertices left over (empty when everything peeled).
    """
    degree = {vertex: g.degree(vertex) for vertex in g.vertices()}
    heap = [(d, _SIDE_RANK[side], index) for (side, index), d in degree.items()]
    heapq.heapify(heap)
    removed: Set[Vertex] = set()
    steps = []

    while heap:
        d, rank, index = heapq.heappop(heap)
        vertex = ("u" if rank == 0 else "v", index)
        if vertex in removed or d != degree[vertex]:
            continue
        if threshold is not None and d > threshold:
            heapq.heappush(heap, (d, rank, index))
            break
        removed.add(vertex)
        steps.append((vertex, d))
        other = "v" if vertex[0] == "u" else "u"
        for neighbor in g.neighbors(vertex):
            key = (other, neighbor)
            if key not in removed:
                degree[key] -= 1
                heapq.heappush(heap, (degree[key], _SIDE_RANK[other], neighbor))

    remaining = {vertex for vertex in degree if vertex not in removed}
    return steps, remaining


def degeneracy(g: BipartiteGraph):
    """(d, certificate): d is the largest degree recorded by a full min-degree peel"""
    steps, _ = peel(g)
    d = max((deg for _, deg in steps), default=0)
    logger.debug(f"Degeneracy {d} over {len(steps)} vertices")
    return d, EliminationCertificate(tuple(steps), d)


def replay_certificate(g: BipartiteGraph, cert: EliminationCertificate) -> bool:
    """True iff the steps remove every vertex once, each at its recorded degree, all within the claim"""
    seen = set()
    for vertex, _ in cert.steps:
        if vertex in seen:
            return False
        seen.add(vertex)
    if seen != set(g.vertices()):
        return False

    removed = set()
    for vertex, recorded in cert.steps:
        other = "v" if vertex[0] == "u" else "u"
        live = sum(1 for n in g.neighbors(vertex) if (other, n) not in removed)
        if live != recorded or recorded > cert.claimed_degeneracy:
            return False
        removed.add(vertex)
    return True
