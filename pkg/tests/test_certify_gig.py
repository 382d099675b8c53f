import random
from collections import Counter

import pytest

from src.certify import (
    Biclique, GigContext, Rule, WithinBound, certify_gig, check_certificate, credit_ledger,
    is_down_heavy, is_up_heavy, verify_ledger,
)
from src.construct import complete_grid, duplicate, random_representation, ugig_construction
from src.geometry import ClassTag, HSegment, Representation, VSegment, build_graph
from src.oracle import find_biclique


def heavy_fixture():
    horizontals = [HSegment(0, 10, 1), HSegment(0, 10, 2), HSegment(0, 10, 3), HSegment(0, 10, 10), HSegment(0, 10, 20)]
    return Representation(ClassTag.GIG, horizontals, [VSegment(5, 0, 20)])


def sparse_long_verticals(rng):
    """K_{2,2}-free GIG: tall verticals, each crossed by its own short horizontals plus at most one shared with its right neighbor"""
    count = rng.randint(1, 5)
    horizontals = []
    for j in range(count):
        for _ in range(rng.randint(10, 70)):
            horizontals.append((10 * j + rng.choice([0, 2, 4]), 10 * j + rng.choice([6, 8])))
        if j + 1 < count and rng.random() < 0.5:
            horizontals.append((10 * j + 4, 10 * j + 16))
    for _ in range(rng.randint(0, 5)):
        start = 10 * count + rng.randint(0, 20)
        horizontals.append((start, start + rng.randint(1, 10)))
    rng.shuffle(horizontals)
    total = len(horizontals)
    heights = rng.sample(range(1, 4 * total + 2, 2), total)
    return Representation(
        ClassTag.GIG,
        [HSegment(lo, hi, y) for (lo, hi), y in zip(horizontals, heights)],
        [VSegment(10 * j + 5, 0, 4 * total + 2) for j in range(count)],
    )


class TestHeavy:
    def test_down_heavy_counts_strictly_below(self):
        rep = heavy_fixture()
        assert is_down_heavy(rep, 0, 3, 2)
        assert not is_up_heavy(rep, 0, 3, 2)
        assert not is_down_heavy(rep, 0, 2, 2)

    def test_endpoint_is_not_interior(self):
        assert not is_down_heavy(heavy_fixture(), 0, 4, 2)

    def test_k1_only_needs_interior(self):
        rep = heavy_fixture()
        assert is_down_heavy(rep, 0, 0, 1)
        assert is_up_heavy(rep, 0, 0, 1)
        assert not is_up_heavy(rep, 0, 4, 1)


class TestLedger:
    def test_rule_amounts(self):
        assert Rule.ALG1_DL.amount == 18
        assert Rule.ALG2_RU.amount == 9

    def test_no_heavy_verticals(self):
        assert credit_ledger(complete_grid(2, 2), 2).payments == ()

    def test_low_degree_is_vacuous(self):
        rep = ugig_construction(2)
        assert verify_ledger(rep, credit_ledger(rep, 2), 2) == []

    def test_blocks(self):
        ctx = GigContext(complete_grid(27, 1))
        blocks = ctx.blocks(0, 2)
        assert len(blocks) == 7
        assert all(len(block) == 3 for block in blocks)
        heights = [ctx.horizontals[u].y for block in blocks for u in block]
        assert heights == list(range(4, 25))

    def test_random_payouts(self):
        rng = random.Random(23)
        for _ in range(60):
            rep = random_representation("gig", rng.randint(1, 40), rng.randint(1, 40), rng.randrange(10**6))
            g = build_graph(rep)
            for k in (2, 3):
                ledger = credit_ledger(rep, k)
                paid = Counter()
                for p in ledger.payments:
                    paid[p.payer] += p.amount_quarters
                assert max(paid.values(), default=0) <= 108 * (k - 1)
                assert sum(ledger.balances.values()) == sum(paid.values())
                if find_biclique(g, k) is None:
                    assert verify_ledger(rep, ledger, k) == []

    def test_sparse_long_verticals(self):
        rng = random.Random(31)
        active = 0
        for i in range(250):
            rep = sparse_long_verticals(rng)
            g = build_graph(rep)
            if i % 10 == 0:
                assert find_biclique(g, 2) is None
            for k in (2, 3):
                ledger = credit_ledger(rep, k)
                paid = Counter()
                for p in ledger.payments:
                    paid[p.payer] += p.amount_quarters
                assert max(paid.values(), default=0) <= 108 * (k - 1)
                assert sum(ledger.balances.values()) == sum(p.amount_quarters for p in ledger.payments)
                assert verify_ledger(rep, ledger, k) == []
            active += sum(1 for v in range(rep.v_count) if len(g.v_neighbors(v)) >= 27)
        assert active >= 200


class TestCertifyGig:
    def test_ugig(self):
        rep = ugig_construction(2)
        cert = certify_gig(rep, 2)
        assert isinstance(cert, WithinBound)
        assert cert.bound_value == 864
        assert build_graph(rep).edge_count == 40

    def test_duplicated_ugig(self):
        rep = duplicate(ugig_construction(2), 3)
        g = build_graph(rep)
        cert = certify_gig(rep, 3)
        assert isinstance(cert, WithinBound)
        assert g.edge_count == 160
        assert find_biclique(g, 3) is None

    def test_grid_forces_extraction(self):
        rep = complete_grid(28, 28)
        cert = certify_gig(rep, 2)
        assert isinstance(cert, Biclique)
        assert cert.extraction_stage == 1
        assert check_certificate(build_graph(rep), cert)

    def test_k1(self):
        cert = certify_gig(complete_grid(1, 1), 1)
        assert isinstance(cert, Biclique)
        assert (cert.w.u_vertices, cert.w.v_vertices) == ((0,), (0,))

    def test_wrong_class(self):
        from src.utils.errors import InvalidInputError
        with pytest.raises(InvalidInputError):
            certify_gig(Representation(ClassTag.SR), 2)

    def test_random_soundness(self):
        rng = random.Random(29)
        for _ in range(1000):
            rep = random_representation("gig", rng.randint(1, 60), rng.randint(1, 60), rng.randrange(10**6))
            g = build_graph(rep)
            for k in (2, 3):
                cert = certify_gig(rep, k)
                assert check_certificate(g, cert)
                if isinstance(cert, WithinBound):
                    assert cert.cert.max_degree <= 27 * (k - 1)
                    assert g.edge_count <= cert.bound_value

    def test_free_graphs_are_certified(self):
        rng = random.Random(37)
        for _ in range(500):
            rep = random_representation("gig", rng.randint(1, 40), rng.randint(1, 40), rng.randrange(10**6))
            g = build_graph(rep)
            for k in (2, 3):
                if find_biclique(g, k) is None:
                    cert = certify_gig(rep, k)
                    assert isinstance(cert, WithinBound)
                    assert cert.cert.max_degree <= 27 * (k - 1)
