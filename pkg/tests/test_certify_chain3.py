import random

from src.certify import Biclique, WithinBound, certify_chain3, check_certificate, classify_edges_chain3
from src.certify.bounds import chain3_bound
from src.construct import random_representation
from src.geometry import BottomlessRect, ClassTag, HSegment, Representation, build_graph
from src.oracle import Order, find_biclique


def chain3(segments, rects):
    return Representation(ClassTag.CHAIN3_BRC, segments, rects)


def test_bound_value():
    assert chain3_bound(10, 10, 3) == 180


def test_edgeless_k1():
    rep = chain3([HSegment(0, 4, 9)], [BottomlessRect(0, 4, 5)])
    cert = certify_chain3(rep, 1)
    assert isinstance(cert, WithinBound)
    assert cert.bound_value == 0


class TestClassification:
    def test_single_edge_is_thin(self):
        rep = chain3([HSegment(1, 2, 1)], [BottomlessRect(0, 4, 5)])
        classification = classify_edges_chain3(rep, 2)
        assert classification.is_thin((0, 0))

    def test_dl_successor(self):
        rep = chain3([HSegment(2, 6, 5), HSegment(1, 5, 3)], [BottomlessRect(0, 10, 6)])
        classification = classify_edges_chain3(rep, 2)
        assert classification.tags[(0, 0)] == {Order.DL}
        assert classification.is_thin((1, 0))

    def test_nested_family(self):
        rep = chain3(
            [HSegment(0, 10, 1), HSegment(1, 9, 2), HSegment(2, 8, 3)],
            [BottomlessRect(0, 10, 5)],
        )
        classification = classify_edges_chain3(rep, 2)
        assert classification.tags[(0, 0)] == {Order.C}
        assert classification.tags[(1, 0)] == {Order.C}
        assert classification.is_thin((2, 0))
        assert classification.tally()["bulky"] == {"DL": 0, "DR": 0, "C": 2}


def test_bulky_extraction():
    rep = chain3(
        [HSegment(2, 6, 5), HSegment(1, 5, 3)],
        [BottomlessRect(0, 10, 6), BottomlessRect(0, 10, 7)],
    )
    cert = certify_chain3(rep, 2)
    assert isinstance(cert, Biclique)
    assert (cert.w.u_vertices, cert.w.v_vertices) == ((0, 1), (0, 1))


def test_random_accounting():
    rng = random.Random(17)
    checked = 0
    for _ in range(500):
        m, n = rng.randint(1, 30), rng.randint(1, 30)
        rep = random_representation("chain3_brc", m, n, rng.randrange(10**6))
        g = build_graph(rep)
        for k in (2, 3):
            cert = certify_chain3(rep, k)
            assert check_certificate(g, cert)
            if isinstance(cert, Biclique):
                continue
            classification = classify_edges_chain3(rep, k)
            assert all(count <= k - 1 for count in classification.bulky_counts.values())
            assert all(count <= 6 * (k - 1) for count in classification.thin_counts.values())
            assert g.edge_count <= (3 * m + 6 * n) * (k - 1)
            assert cert.tally["thin_edges"] == classification.thin_edges
            if find_biclique(g, k) is None:
                checked += 1
    assert checked > 0
