"""
Chain³ certification over segment / bottomless-rectangle containment.

An edge (u, v) is O-bulky when the rectangle of v contains at least k-1
O-successors of the segment of u; edges bulky for no order are thin.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

import numpy as np

from .bounds import chain3_bound
from .certificate import Biclique, Certificate, WithinBound
from ..geometry.graph import BipartiteGraph
from ..geometry.representation import ClassTag, Representation, build_graph
from ..oracle.biclique import BicliqueWitness, verify_witness
from ..oracle.orders import ORDERS, Order, successors
from ..oracle.peeling import degeneracy, EliminationCertificate, peel
from ..utils.errors import InternalCertificationError, InvalidInputError

logger = logging.getLogger("certify.chain3")


@dataclass(frozen=True)
class EdgeClassification:
    tags: Dict[Tuple[int, int], FrozenSet[Order]]
    bulky_counts: Dict[Tuple[int, Order], int]
    thin_counts: Dict[int, int]

    def is_thin(self, edge) -> bool:
        return not self.tags[edge]

    @property
    def bulky_edges(self) -> int:
        return sum(1 for tags in self.tags.values() if tags)

    @property
    def thin_edges(self) -> int:
        return sum(1 for tags in self.tags.values() if not tags)

    def tally(self) -> dict:
        per_order = {order.value: 0 for order in ORDERS}
        for (_, order), count in self.bulky_counts.items():
            per_order[order.value] += count
        return {
            "bulky": per_order,
            "bulky_edges": self.bulky_edges,
            "thin_edges": self.thin_edges,
            "max_thin_per_v": max(self.thin_counts.values(), default=0),
        }


def _check(rep: Representation):
    if rep.class_tag is not ClassTag.CHAIN3_BRC:
        raise InvalidInputError(f"Expected a chain3_brc representation, got {rep.class_tag.value}")


def _successor_matrices(segments):
    """succ[order][a, b] is True iff segment b succeeds segment a"""
    x_lo = np.array([s.x_lo for s in segments], dtype=np.int64)
    x_hi = np.array([s.x_hi for s in segments], dtype=np.int64)
    y = np.array([s.y for s in segments], dtype=np.int64)
    a_lo, b_lo = x_lo[:, None], x_lo[None, :]
    a_hi, b_hi = x_hi[:, None], x_hi[None, :]
    below = y[None, :] < y[:, None]
    same_x = (a_lo == b_lo) & (a_hi == b_hi)
    return {
        Order.DL: (b_lo <= a_lo) & (b_hi <= a_hi) & below,
        Order.DR: (a_lo <= b_lo) & (a_hi <= b_hi) & below,
        Order.C: (a_lo <= b_lo) & (b_hi <= a_hi) & ~same_x,
    }


def _classify(rep: Representation, g: BipartiteGraph, k: int) -> EdgeClassification:
    m, n = rep.u_count, rep.v_count
    containment = np.zeros((m, n), dtype=np.int64)
    for u, v in g.edges:
        containment[u, v] = 1

    tags = {edge: set() for edge in g.edges}
    bulky_counts = {(u, order): 0 for u in range(m) for order in ORDERS}
    if m and n:
        for order, succ in _successor_matrices(rep.u_objects).items():
            # inside[u, v] = number of O-successors of u contained in v
            inside = succ.astype(np.int64) @ containment
            bulky = (containment == 1) & (inside >= k - 1)
            for u, v in zip(*np.nonzero(bulky)):
                tags[(int(u), int(v))].add(order)
                bulky_counts[(int(u), order)] += 1

    thin_counts = {v: 0 for v in range(n)}
    for (u, v), found in tags.items():
        if not found:
            thin_counts[v] += 1
    return EdgeClassification(
        {edge: frozenset(found) for edge, found in tags.items()},
        bulky_counts,
        thin_counts,
    )


def classify_edges_chain3(rep: Representation, k: int) -> EdgeClassification:
    """Tag every edge with the orders in which it is bulky"""
    _check(rep)
    if k < 1:
        raise InvalidInputError(f"k must be at least 1, got {k}")
    return _classify(rep, build_graph(rep), k)


_EXTRACTION_KEYS = {
    Order.DL: lambda s, i: (-s.x_lo, i),
    Order.DR: lambda s, i: (s.x_hi, i),
    Order.C: lambda s, i: (s.y, i),
}


def _extract_bulky(rep, classification, u, order, k):
    """u has k O-bulky edges: u and its k-1 extreme O-successors are adjacent to all k rectangles"""
    segments = rep.u_objects
    B = sorted(v for (a, v), found in classification.tags.items() if a == u and order in found)[:k]
    key = _EXTRACTION_KEYS[order]
    chosen = sorted(successors(segments, u, order), key=lambda i: key(segments[i], i))[:k - 1]
    return BicliqueWitness(tuple(sorted([u] + chosen)), tuple(B))


def certify_chain3(rep: Representation, k: int) -> Certificate:
    """Within (3m+6n)(k-1) edges, or a K_{k,k} built from a vertex with k bulky edges of one order"""
    _check(rep)
    if k < 1:
        raise InvalidInputError(f"k must be at least 1, got {k}")
    g = build_graph(rep)
    bound = chain3_bound(rep.u_count, rep.v_count, k)

    if k == 1:
        if g.edges:
            u, v = min(g.edges)
            return Biclique(BicliqueWitness((u,), (v,)), bound)
        steps, _ = peel(g)
        return WithinBound(EliminationCertificate(tuple(steps), 0), bound)

    classification = _classify(rep, g, k)
    for u in range(rep.u_count):
        for order in ORDERS:
            if classification.bulky_counts[(u, order)] >= k:
                witness = _extract_bulky(rep, classification, u, order, k)
                logger.debug(f"u={u} has {classification.bulky_counts[(u, order)]} {order.value}-bulky edges")
                if not verify_witness(g, witness):
                    logger.error(f"Bulky extraction produced an invalid witness {witness}")
                    raise InternalCertificationError("bulky extraction failed its self-check")
                return Biclique(witness, bound)

    tally = classification.tally()
    if g.edge_count > bound:
        logger.error(f"{g.edge_count} edges exceed {bound} with no vertex over the bulky cap: {tally}")
        raise InternalCertificationError("bulky/thin tally exceeds the chain3 bound")
    _, cert = degeneracy(g)
    return WithinBound(cert, bound, tally)
