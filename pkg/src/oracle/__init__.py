from .biclique import BicliqueWitness, find_biclique, verify_witness
from .peeling import EliminationCertificate, peel, degeneracy, replay_certificate
from .matrix import is_gamma_free
from .chordal import is_chordal_bipartite
from .orders import Order, ORDERS, comparability, succeeds, successors
