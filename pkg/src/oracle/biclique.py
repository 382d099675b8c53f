"""
Exhaustive K_{k,k} search over neighborhood bitmasks.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from ..geometry.graph import BipartiteGraph
from ..utils.config import DEFAULT_LIMITS
from ..utils.errors import InvalidInputError, OracleLimitError

logger = logging.getLogger("oracle.biclique")


@dataclass(frozen=True)
class BicliqueWitness:
    u_vertices: Tuple[int, ...]
    v_vertices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "u_vertices", tuple(self.u_vertices))
        object.__setattr__(self, "v_vertices", tuple(self.v_vertices))

    @property
    def k(self):
        return len(self.u_vertices)


def _mask(indices):
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


def _lowest_bits(mask, count):
    out = []
    while mask and len(out) < count:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def find_biclique(g: BipartiteGraph, k: int, max_side: Optional[int] = None) -> Optional[BicliqueWitness]:
    """
    A K_{k,k} in g, or None when g has none.

    Enumerates k-subsets of the smaller side in index order, intersecting
    neighborhoods and pruning whenever fewer than k common neighbors remain.
    Vertices of degree < k are never part of a biclique and are skipped.
    """
    if k < 1:
        raise InvalidInputError(f"k must be at least 1, got {k}")
    cap = DEFAULT_LIMITS.max_side if max_side is None else max_side

    search_u = g.u_count <= g.v_count
    count = g.u_count if search_u else g.v_count
    neighbors = g.u_neighbors if search_u else g.v_neighbors
    candidates = [(x, _mask(neighbors(x))) for x in range(count) if len(neighbors(x)) >= k]

    if len(candidates) < k:
        return None
    if len(candidates) > cap:
        raise OracleLimitError(
            f"oracle-limit: {len(candidates)} candidate vertices exceed the cap of {cap}",
            size=len(candidates), cap=cap,
        )

    chosen = []

    def extend(start, common):
        if len(chosen) == k:
            return common
        for pos in range(start, len(candidates)):
            if len(candidates) - pos < k - len(chosen):
                return None
            x, mask = candidates[pos]
            narrowed = common & mask
            if narrowed.bit_count() < k:
                continue
            chosen.append(x)
            found = extend(pos + 1, narrowed)
            if found is not None:
                return found
            chosen.pop()
        return None

    full = (1 << (g.v_count if search_u else g.u_count)) - 1
    common = extend(0, full)
    if common is None:
        logger.debug(f"No K_{k},{k} among {len(candidates)} candidates")
        return None

    other = _lowest_bits(common, k)
    if search_u:
        return BicliqueWitness(tuple(chosen), tuple(other))
    return BicliqueWitness(tuple(other), tuple(chosen))


def verify_witness(g: BipartiteGraph, w: BicliqueWitness) -> bool:
    """True iff w names k distinct vertices per side, all pairwise adjacent in g"""
    us, vs = w.u_vertices, w.v_vertices
    if len(us) == 0 or len(us) != len(vs):
        return False
    if len(set(us)) != len(us) or len(set(vs)) != len(vs):
        return False
    if any(not (0 <= u < g.u_count) for u in us) or any(not (0 <= v < g.v_count) for v in vs):
        return False
    return all(g.has_edge(u, v) for u in us for v in vs)
