from __future__ import annotations

import logging

from .bounds import sr_bound
from .certificate import Biclique, Certificate, WithinBound
from ..geometry.representation import ClassTag, Representation, build_graph
from ..oracle.biclique import BicliqueWitness, verify_witness
from ..oracle.peeling import EliminationCertificate, peel
from ..utils.errors import InternalCertificationError, InvalidInputError

logger = logging.getLogger("certify.sr")


def certify_sr(rep: Representation, k: int) -> Certificate:
    """Peel at 2(k-1); extract a K_{k,k} around the highest-starting ray when stuck"""
    if rep.class_tag is not ClassTag.SR:
        raise InvalidInputError(f"certify_sr needs an sr representation, got {rep.class_tag.value}")
    if k < 1:
        raise InvalidInputError(f"k must be at least 1, got {k}")
    g = build_graph(rep)
    bound = sr_bound(rep.u_count, rep.v_count, k)
    threshold = 2 * (k - 1)

    steps, remaining = peel(g, threshold=threshold)
    if not remaining:
        return WithinBound(EliminationCertificate(tuple(steps), threshold), bound)

    segments, rays = rep.u_objects, rep.v_objects
    live_u = {i for side, i in remaining if side == "u"}
    live_v = {j for side, j in remaining if side == "v"}

    # ray with the largest start; every live segment on it lies above every live ray's start
    r = min(live_v, key=lambda j: (-rays[j].start_y, j))
    S = sorted(u for u in g.v_neighbors(r) if u in live_u)
    s_left = sorted(S, key=lambda u: (segments[u].x_lo, u))[:k - 1]
    s_right = sorted(S, key=lambda u: (-segments[u].x_hi, u))[:k - 1]
    chosen = set(s_left) | set(s_right)
    s = next(u for u in S if u not in chosen)

    crossing = [j for j in sorted(g.u_neighbors(s)) if j in live_v and j != r]
    left = [j for j in crossing if rays[j].x <= rays[r].x]
    right = [j for j in crossing if rays[j].x > rays[r].x]
    logger.debug(f"Stuck at ray {r}: |S|={len(S)}, left={len(left)}, right={len(right)}")

    if len(left) >= k - 1:
        witness = BicliqueWitness(tuple(sorted(s_left + [s])), tuple(sorted(left[:k - 1] + [r])))
    else:
        witness = BicliqueWitness(tuple(sorted(s_right + [s])), tuple(sorted(right[:k - 1] + [r])))

    if not verify_witness(g, witness):
        logger.error(f"Segment-ray extraction produced an invalid witness {witness}")
        raise InternalCertificationError("segment-ray extraction failed its self-check")
    return Biclique(witness, bound)
