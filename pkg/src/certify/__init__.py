from .certificate import WithinBound, Biclique, Certificate, check_certificate
from .bounds import class_bound, chordal_bound, sr_bound, chain3_bound, gig_bound
from .chordal import gamma_free_order, representation_order, certify_chordal
from .segment_ray import certify_sr
from .chain3 import EdgeClassification, classify_edges_chain3, certify_chain3
from .gig import (
    Rule, Payment, CreditLedger, LedgerViolation, GigContext,
    is_down_heavy, is_up_heavy, credit_ledger, verify_ledger, certify_gig,
)
from .dispatch import certify, bound_family
