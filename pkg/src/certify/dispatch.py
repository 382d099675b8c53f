from __future__ import annotations

import logging

from .certificate import Certificate
from .chain3 import certify_chain3
from .chordal import certify_chordal, gamma_free_order, representation_order
from .gig import certify_gig
from .segment_ray import certify_sr
from ..geometry.representation import ClassTag, Representation, build_graph
from ..oracle.matrix import is_gamma_free
from ..utils.config import DEFAULT_LIMITS, OracleLimits
from ..utils.errors import InvalidInputError

logger = logging.getLogger("certify")

# Classes whose graphs have Ferrers dimension at most two, hence chordal bipartite
CHORDAL_CLASSES = {ClassTag.CHAIN, ClassTag.CONV, ClassTag.INTERVAL_CONTAINMENT}


def bound_family(tag: ClassTag) -> str:
    if tag in CHORDAL_CLASSES:
        return "chordal"
    if tag is ClassTag.SR:
        return "sr"
    if tag is ClassTag.CHAIN3_BRC:
        return "chain3"
    if tag is ClassTag.GIG:
        return "gig"
    raise InvalidInputError(f"No certifier covers class {tag.value}")


def certify(rep: Representation, k: int, limits: OracleLimits = DEFAULT_LIMITS) -> Certificate:
    """Route a representation to its class certifier"""
    family = bound_family(rep.class_tag)
    logger.debug(f"Certifying {rep.class_tag.value} ({rep.u_count}+{rep.v_count}) with k={k} via {family}")
    if family == "chordal":
        g = build_graph(rep)
        ordering = representation_order(rep)
        if is_gamma_free(g, *ordering) is not None:
            logger.info("Geometric order is not gamma-free, refining the matrix instead")
            ordering = gamma_free_order(g, exhaustive_cap=limits.gamma_exhaustive_cap)
        if ordering is None:
            raise InvalidInputError("Graph admits no gamma-free ordering, so it is not chordal bipartite")
        return certify_chordal(g, ordering[0], ordering[1], k)
    if family == "sr":
        return certify_sr(rep, k)
    if family == "chain3":
        return certify_chain3(rep, k)
    return certify_gig(rep, k, max_side=limits.max_side)
