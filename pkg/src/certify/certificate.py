from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from ..geometry.graph import BipartiteGraph
from ..oracle.biclique import BicliqueWitness, verify_witness
from ..oracle.peeling import EliminationCertificate, replay_certificate


@dataclass(frozen=True)
class WithinBound:
    """The graph has at most bound_value edges; says nothing about K_{k,k}-freeness"""
    cert: EliminationCertificate
    bound_value: int
    tally: Optional[dict] = None

    kind = "within_bound"


@dataclass(frozen=True)
class Biclique:
    w: BicliqueWitness
    bound_value: int
    extraction_stage: Optional[int] = None

    kind = "biclique"


Certificate = Union[WithinBound, Biclique]


def check_certificate(g: BipartiteGraph, certificate: Certificate) -> bool:
    """Soundness of a certificate against the graph it claims to describe"""
    if isinstance(certificate, Biclique):
        return verify_witness(g, certificate.w)
    if not replay_certificate(g, certificate.cert):
        return False
    return g.edge_count <= certificate.bound_value
