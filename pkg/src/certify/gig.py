"""
Grid intersection graph certification via the credit scheme.

Every horizontal segment pays credits to vertical segments under two rules.
Credits are counted in quarters, so the 9/2 credits of a neighbor payment are
18 units and the 9/4 credits of a further payment are 9 units.

A vertical ν is down-heavy w.r.t. a horizontal σ when σ.y lies strictly inside
ν.y and at least 3(k-1) neighbors of ν lie strictly below σ.y (up-heavy:
strictly above).
"""

from __future__ import annotations

import bisect
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from .bounds import gig_bound
from .certificate import Biclique, Certificate, WithinBound
from ..geometry.graph import BipartiteGraph
from ..geometry.representation import ClassTag, Representation, build_graph
from ..oracle.biclique import BicliqueWitness, find_biclique, verify_witness
from ..oracle.peeling import EliminationCertificate, peel
from ..utils.errors import InternalCertificationError, InvalidInputError, OracleLimitError

logger = logging.getLogger("certify.gig")

NEIGHBOR_PAYMENT = 18
FURTHER_PAYMENT = 9


class Rule(str, Enum):
    ALG1_UL = "ALG1_UL"
    ALG1_UR = "ALG1_UR"
    ALG1_DL = "ALG1_DL"
    ALG1_DR = "ALG1_DR"
    ALG2_LU = "ALG2_LU"
    ALG2_LD = "ALG2_LD"
    ALG2_RU = "ALG2_RU"
    ALG2_RD = "ALG2_RD"

    @property
    def amount(self):
        return NEIGHBOR_PAYMENT if self.value.startswith("ALG1") else FURTHER_PAYMENT


@dataclass(frozen=True)
class Payment:
    payer: int
    payee: int
    amount_quarters: int
    rule: Rule


@dataclass(frozen=True)
class CreditLedger:
    payments: Tuple[Payment, ...]
    balances: Dict[int, int] = field(default_factory=dict)

    def paid_by(self, payer: int) -> List[Payment]:
        return [p for p in self.payments if p.payer == payer]

    def payees(self, payer: int, rule: Rule) -> List[int]:
        return [p.payee for p in self.payments if p.payer == payer and p.rule is rule]

    def is_generous(self, payer: int, payee: int) -> bool:
        """payer made a neighbor payment to payee"""
        return any(
            p.payer == payer and p.payee == payee and p.rule.value.startswith("ALG1")
            for p in self.payments
        )


@dataclass(frozen=True)
class LedgerViolation:
    vertical: int
    block: Optional[int]  # None for the total-credit check
    neighbors: Tuple[int, ...]
    received: int
    required: int


class GigContext:
    """A GIG representation with its graph and per-vertical sorted neighbor heights"""

    def __init__(self, rep: Representation, graph: BipartiteGraph = None):
        if rep.class_tag is not ClassTag.GIG:
            raise InvalidInputError(f"Expected a gig representation, got {rep.class_tag.value}")
        self.rep = rep
        self.graph = graph if graph is not None else build_graph(rep)
        self.horizontals = rep.u_objects
        self.verticals = rep.v_objects
        self._heights = [
            sorted(self.horizontals[u].y for u in self.graph.v_neighbors(v))
            for v in range(rep.v_count)
        ]

    def spans(self, nu: int, sigma: int) -> bool:
        """σ.y lies strictly inside ν.y"""
        vertical = self.verticals[nu]
        return vertical.y_lo < self.horizontals[sigma].y < vertical.y_hi

    def below(self, nu: int, sigma: int) -> int:
        return bisect.bisect_left(self._heights[nu], self.horizontals[sigma].y)

    def above(self, nu: int, sigma: int) -> int:
        heights = self._heights[nu]
        return len(heights) - bisect.bisect_right(heights, self.horizontals[sigma].y)

    def down_heavy(self, nu: int, sigma: int, k: int) -> bool:
        return self.spans(nu, sigma) and self.below(nu, sigma) >= 3 * (k - 1)

    def up_heavy(self, nu: int, sigma: int, k: int) -> bool:
        return self.spans(nu, sigma) and self.above(nu, sigma) >= 3 * (k - 1)

    def left_of(self, sigma: int) -> List[int]:
        x_lo = self.horizontals[sigma].x_lo
        return [v for v, vertical in enumerate(self.verticals) if vertical.x < x_lo]

    def right_of(self, sigma: int) -> List[int]:
        x_hi = self.horizontals[sigma].x_hi
        return [v for v, vertical in enumerate(self.verticals) if vertical.x > x_hi]

    def by_x(self, verticals):
        return sorted(verticals, key=lambda v: (self.verticals[v].x, v))

    def blocks(self, nu: int, k: int) -> List[List[int]]:
        """
        Disjoint runs of 3(k-1) consecutive neighbors of ν by height, skipping
        the 3(k-1) lowest and highest neighbors.
        """
        size = 3 * (k - 1)
        neighbors = sorted(self.graph.v_neighbors(nu), key=lambda u: (self.horizontals[u].y, u))
        if size == 0 or len(neighbors) < 2 * size:
            return []
        count = (len(neighbors) - 2 * size) // size
        return [neighbors[size + b * size: size + (b + 1) * size] for b in range(count)]


def is_down_heavy(rep: Representation, nu: int, sigma: int, k: int, context: GigContext = None) -> bool:
    """ν is down-heavy with respect to σ"""
    return (context or GigContext(rep)).down_heavy(nu, sigma, k)


def is_up_heavy(rep: Representation, nu: int, sigma: int, k: int, context: GigContext = None) -> bool:
    """ν is up-heavy with respect to σ"""
    return (context or GigContext(rep)).up_heavy(nu, sigma, k)


def _ledger(ctx: GigContext, k: int) -> CreditLedger:
    payments = []
    quota = k - 1

    def pay(sigma, receivers, rule):
        for nu in receivers:
            payments.append(Payment(sigma, nu, rule.amount, rule))

    if quota > 0:
        for sigma in range(len(ctx.horizontals)):
            neighbors = ctx.by_x(ctx.graph.u_neighbors(sigma))
            up = [nu for nu in neighbors if ctx.up_heavy(nu, sigma, k)]
            down = [nu for nu in neighbors if ctx.down_heavy(nu, sigma, k)]
            pay(sigma, up[:quota], Rule.ALG1_UL)
            pay(sigma, up[::-1][:quota], Rule.ALG1_UR)
            pay(sigma, down[:quota], Rule.ALG1_DL)
            pay(sigma, down[::-1][:quota], Rule.ALG1_DR)

            left = ctx.by_x(ctx.left_of(sigma))
            right = ctx.by_x(ctx.right_of(sigma))
            pay(sigma, [nu for nu in reversed(left) if ctx.up_heavy(nu, sigma, k)][:quota], Rule.ALG2_LU)
            pay(sigma, [nu for nu in reversed(left) if ctx.down_heavy(nu, sigma, k)][:quota], Rule.ALG2_LD)
            pay(sigma, [nu for nu in right if ctx.up_heavy(nu, sigma, k)][:quota], Rule.ALG2_RU)
            pay(sigma, [nu for nu in right if ctx.down_heavy(nu, sigma, k)][:quota], Rule.ALG2_RD)

    balances = defaultdict(int)
    for payment in payments:
        balances[payment.payee] += payment.amount_quarters
    return CreditLedger(tuple(payments), dict(balances))


def credit_ledger(rep: Representation, k: int, context: GigContext = None) -> CreditLedger:
    """Run both payment algorithms from every horizontal segment"""
    if k < 1:
        raise InvalidInputError(f"k must be at least 1, got {k}")
    return _ledger(context or GigContext(rep), k)


def _verify(ctx: GigContext, ledger: CreditLedger, k: int) -> List[LedgerViolation]:
    if k < 2:
        return []
    received = defaultdict(list)
    for payment in ledger.payments:
        received[payment.payee].append(payment)

    violations = []
    for nu in range(len(ctx.verticals)):
        degree = len(ctx.graph.v_neighbors(nu))
        if degree < 27 * (k - 1):
            continue
        for b, block in enumerate(ctx.blocks(nu, k)):
            low = min(ctx.horizontals[u].y for u in block)
            high = max(ctx.horizontals[u].y for u in block)
            got = sum(
                p.amount_quarters for p in received[nu]
                if low <= ctx.horizontals[p.payer].y <= high
            )
            if got < NEIGHBOR_PAYMENT * (k - 1):
                violations.append(LedgerViolation(nu, b, tuple(block), got, NEIGHBOR_PAYMENT * (k - 1)))
        total = ledger.balances.get(nu, 0)
        if total < 4 * degree:
            violations.append(LedgerViolation(nu, None, tuple(sorted(ctx.graph.v_neighbors(nu))), total, 4 * degree))
    return violations


def verify_ledger(rep: Representation, ledger: CreditLedger, k: int, context: GigContext = None) -> List[LedgerViolation]:
    """Blocks of high-degree verticals that received too little, and verticals short of 4|N(ν)| quarters"""
    return _verify(context or GigContext(rep), ledger, k)


def _template_candidates(ctx: GigContext, ledger: CreditLedger, nu: int, block: List[int], k: int):
    """
    Candidate (rows, columns) from the stingy part of a block: the extreme
    stingy segment σ, the k-1 extreme heavy verticals it paid, and the
    one among them reaching least far toward the rest of the stingy set.
    """
    H, V = ctx.horizontals, ctx.verticals
    stingy = [u for u in block if not ledger.is_generous(u, nu)]
    if not stingy:
        return
    right_sigma = min(stingy, key=lambda u: (H[u].x_hi, u))
    left_sigma = min(stingy, key=lambda u: (-H[u].x_lo, u))
    plans = [
        (right_sigma, "down", Rule.ALG1_DR),
        (right_sigma, "up", Rule.ALG1_UR),
        (left_sigma, "down", Rule.ALG1_DL),
        (left_sigma, "up", Rule.ALG1_UL),
    ]
    for sigma, direction, rule in plans:
        if direction == "down":
            side = [u for u in stingy if H[u].y < H[sigma].y]
        else:
            side = [u for u in stingy if H[u].y > H[sigma].y]
        Q = ledger.payees(sigma, rule)
        if len(side) < k - 1 or len(Q) < k - 1:
            continue
        if direction == "down":
            reach = max(Q, key=lambda v: (V[v].y_lo, -v))
        else:
            reach = min(Q, key=lambda v: (V[v].y_hi, v))
        rows = [sigma] + [u for u in side if ctx.graph.has_edge(u, reach)]
        yield rows, list(Q) + [nu]


def _search(graph: BipartiteGraph, rows, cols, k, max_side):
    sub, u_map, v_map = graph.induced(rows, cols)
    found = find_biclique(sub, k, max_side=max_side)
    if found is None:
        return None
    return BicliqueWitness(
        tuple(sorted(u_map[i] for i in found.u_vertices)),
        tuple(sorted(v_map[j] for j in found.v_vertices)),
    )


def _extract(ctx: GigContext, k: int, max_side: Optional[int]):
    """(witness, stage) for a GIG whose minimum degree exceeds 27(k-1)"""
    graph = ctx.graph
    ledger = _ledger(ctx, k)
    order = sorted(range(len(ctx.verticals)), key=lambda v: (-len(graph.v_neighbors(v)), v))

    for nu in order:
        if len(graph.v_neighbors(nu)) < 27 * (k - 1):
            continue
        for block in ctx.blocks(nu, k):
            for rows, cols in _template_candidates(ctx, ledger, nu, block, k):
                witness = _search(graph, rows, cols, k, max_side)
                if witness is not None:
                    return witness, 1

    logger.info("Proof templates found nothing, searching localized regions")
    for nu in order:
        neighbors = graph.v_neighbors(nu)
        region_v = {nu} | {
            other for other in range(len(ctx.verticals))
            if any(ctx.spans(other, sigma) for sigma in neighbors)
        }
        region_u = set(neighbors)
        for other in region_v:
            region_u |= graph.v_neighbors(other)
        try:
            witness = _search(graph, region_u, region_v, k, max_side)
        except OracleLimitError as e:
            logger.debug(f"Skipping region of vertical {nu}: {e}")
            continue
        if witness is not None:
            return witness, 2

    logger.info("Localized search found nothing, running the whole-graph oracle")
    witness = find_biclique(graph, k, max_side=max_side)
    if witness is not None:
        return witness, 3
    return None, None


def certify_gig(rep: Representation, k: int, max_side: Optional[int] = None) -> Certificate:
    """Peel at 27(k-1); when stuck, extract a K_{k,k} in escalating stages"""
    if rep.class_tag is not ClassTag.GIG:
        raise InvalidInputError(f"certify_gig needs a gig representation, got {rep.class_tag.value}")
    if k < 1:
        raise InvalidInputError(f"k must be at least 1, got {k}")
    g = build_graph(rep)
    bound = gig_bound(rep.u_count, rep.v_count, k)
    threshold = 27 * (k - 1)

    steps, remaining = peel(g, threshold=threshold)
    if not remaining:
        return WithinBound(EliminationCertificate(tuple(steps), threshold), bound)

    live_u = sorted(i for side, i in remaining if side == "u")
    live_v = sorted(j for side, j in remaining if side == "v")
    if k == 1:
        u = live_u[0]
        v = min(g.u_neighbors(u) & set(live_v))
        return Biclique(BicliqueWitness((u,), (v,)), bound)

    core = Representation(
        ClassTag.GIG,
        [rep.u_objects[i] for i in live_u],
        [rep.v_objects[j] for j in live_v],
    )
    logger.debug(f"Stuck with a {len(live_u)}+{len(live_v)} core of minimum degree > {threshold}")
    local, stage = _extract(GigContext(core), k, max_side)
    if local is None:
        logger.error("No biclique in a core whose minimum degree exceeds 27(k-1)")
        raise InternalCertificationError("gig extraction found no biclique in the stuck core")

    witness = BicliqueWitness(
        tuple(live_u[i] for i in local.u_vertices),
        tuple(live_v[j] for j in local.v_vertices),
    )
    if not verify_witness(g, witness):
        logger.error(f"GIG extraction produced an invalid witness {witness}")
        raise InternalCertificationError("gig extraction failed its self-check")
    logger.debug(f"Extraction stage {stage} produced {witness}")
    return Biclique(witness, bound, extraction_stage=stage)
