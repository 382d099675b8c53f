import random

import pytest

from conftest import path_graph
from src.certify import (
    Biclique, WithinBound, certify, certify_chordal, check_certificate, class_bound, gamma_free_order,
    representation_order,
)
from src.construct import chain_lower_bound, random_representation
from src.geometry import BipartiteGraph, ClassTag, Representation, build_graph
from src.oracle import find_biclique, is_gamma_free
from src.utils.errors import InvalidInputError


def certify_graph(g, k):
    rows, cols = gamma_free_order(g)
    return certify_chordal(g, rows, cols, k)


class TestGammaFreeOrder:
    def test_all_ones_keeps_natural_order(self):
        assert gamma_free_order(BipartiteGraph.complete(3, 3)) == ((0, 1, 2), (0, 1, 2))

    def test_six_cycle_has_none(self, c6):
        assert gamma_free_order(c6) is None

    def test_tree(self):
        g = path_graph(5)
        rows, cols = gamma_free_order(g)
        assert is_gamma_free(g, rows, cols) is None

    def test_random_convex_graphs(self):
        for seed in range(60):
            g = build_graph(random_representation("conv", 7, 12, seed))
            ordering = gamma_free_order(g)
            assert ordering is not None
            assert is_gamma_free(g, *ordering) is None

    @pytest.mark.parametrize("klass", ["chain", "conv", "interval_containment"])
    def test_geometric_order(self, klass):
        for seed in range(40):
            rep = random_representation(klass, 15, 15, seed)
            g = build_graph(rep)
            assert is_gamma_free(g, *representation_order(rep)) is None
            if klass != "interval_containment":
                swapped = rep.swapped()
                assert is_gamma_free(build_graph(swapped), *representation_order(swapped)) is None

    def test_geometric_order_rejects_other_classes(self):
        with pytest.raises(InvalidInputError):
            representation_order(random_representation("gig", 2, 2, 0))


class TestCertifyChordal:
    def test_path(self, p4):
        cert = certify_graph(p4, 2)
        assert isinstance(cert, WithinBound)
        assert all(d <= 1 for _, d in cert.cert.steps)
        assert cert.bound_value == 4

    def test_four_cycle(self, c4):
        cert = certify_graph(c4, 2)
        assert isinstance(cert, Biclique)
        assert (cert.w.u_vertices, cert.w.v_vertices) == ((0, 1), (0, 1))

    def test_complete(self):
        g = BipartiteGraph.complete(3, 3)
        cert = certify_graph(g, 2)
        assert isinstance(cert, Biclique)
        assert cert.w.k == 2
        assert check_certificate(g, cert)

    def test_rejects_non_gamma_free_order(self):
        g = BipartiteGraph.from_matrix([[0, 1], [1, 1]])
        with pytest.raises(InvalidInputError):
            certify_chordal(g, [0, 1], [0, 1], 2)

    def test_k1(self, p4):
        assert isinstance(certify_graph(p4, 1), Biclique)
        empty = BipartiteGraph(2, 2, frozenset())
        cert = certify_graph(empty, 1)
        assert isinstance(cert, WithinBound) and cert.bound_value == 0


class TestDispatch:
    def test_chain_lower_bound_is_within_bound(self):
        rep = chain_lower_bound(5, 5, 3)
        cert = certify(rep, 3)
        assert isinstance(cert, WithinBound)
        assert cert.bound_value == class_bound("chordal", 5, 5, 3) == 20
        assert build_graph(rep).edge_count == 16

    def test_prig_rejected(self):
        with pytest.raises(InvalidInputError):
            certify(random_representation("prig", 3, 3, 0), 2)

    @pytest.mark.parametrize("klass", ["chain", "conv", "interval_containment"])
    def test_soundness_and_degeneracy(self, klass):
        rng = random.Random(klass)
        for _ in range(300):
            m, n = rng.randint(1, 60), rng.randint(1, 60)
            rep = random_representation(klass, m, n, rng.randrange(10**6))
            g = build_graph(rep)
            for k in (2, 3):
                cert = certify(rep, k)
                assert check_certificate(g, cert)
                if isinstance(cert, WithinBound):
                    assert cert.cert.max_degree <= k - 1
                    assert g.edge_count <= cert.bound_value == class_bound("chordal", m, n, k)

    @pytest.mark.parametrize("klass", ["chain", "conv", "interval_containment"])
    def test_free_graphs_are_certified(self, klass):
        rng = random.Random(f"free-{klass}")
        for _ in range(100):
            rep = random_representation(klass, rng.randint(1, 25), rng.randint(1, 25), rng.randrange(10**6))
            g = build_graph(rep)
            for k in (2, 3):
                cert = certify(rep, k)
                assert isinstance(cert, Biclique) == (find_biclique(g, k) is not None)


def test_bounds_table():
    assert class_bound("chordal", 10, 10, 3) == 2 * 10 * 2
    assert class_bound("sr", 10, 10, 3) == 4 * 10 * 2
    assert class_bound("gig", 10, 10, 3) == 54 * 10 * 2
    assert class_bound("chain3", 10, 10, 3) == 180
    assert class_bound("chaind", 16, 16, 2, d=4) == 576
    with pytest.raises(InvalidInputError):
        class_bound("chaind", 16, 16, 2)
    with pytest.raises(InvalidInputError):
        class_bound("prig", 1, 1, 2)
