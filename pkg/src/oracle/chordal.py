from __future__ import annotations

import logging
from typing import Optional

import networkx as nx

from ..geometry.graph import BipartiteGraph
from ..utils.config import DEFAULT_LIMITS
from ..utils.errors import OracleLimitError

logger = logging.getLogger("oracle.chordal")


def to_networkx(g: BipartiteGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from((("u", i) for i in range(g.u_count)), bipartite=0)
    G.add_nodes_from((("v", j) for j in range(g.v_count)), bipartite=1)
    G.add_edges_from((("u", u), ("v", v)) for u, v in g.edges)
    return G


def chordless_long_cycle(g: BipartiteGraph, cap: Optional[int] = None):
    """A chordless cycle of length at least six, or None"""
    cap = DEFAULT_LIMITS.chordal_cap if cap is None else cap
    size = g.u_count + g.v_count
    if size > cap:
        raise OracleLimitError(f"oracle-limit: {size} vertices exceed the chordal cap of {cap}", size=size, cap=cap)
    for cycle in nx.chordless_cycles(to_networkx(g)):
        if len(cycle) >= 6:
            return cycle
    return None


def is_chordal_bipartite(g: BipartiteGraph, cap: Optional[int] = None) -> bool:
    """True iff every cycle of length six or more has a chord"""
    cycle = chordless_long_cycle(g, cap)
    if cycle is not None:
        logger.debug(f"Chordless cycle of length {len(cycle)}: {cycle}")
    return cycle is None
