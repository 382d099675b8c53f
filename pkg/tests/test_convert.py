import random
from collections import Counter

import pytest

from src.construct import chain_lower_bound, random_representation
from src.convert import (
    ConvFactor, DyadicRange, assemble_chain3, chain3_projections, chaind_bound, conv2_decompose,
    conv2_graph, dyadic_cover, dyadic_decompose, flip_chain_rep, gig_to_conv2, labeled_edges,
    prig_to_conv2,
)
from src.geometry import (
    BipartiteGraph, BottomlessRect, ClassTag, HSegment, Interval, Point1, Point2, Rect,
    Representation, RightRay, build_graph, validate_representation,
)
from src.utils.errors import InvalidInputError


def default_labels(rep):
    return [f"u{i}" for i in range(rep.u_count)], [f"v{j}" for j in range(rep.v_count)]


class TestFlip:
    def test_involution(self):
        rep = chain_lower_bound(3, 3, 2)
        once = flip_chain_rep(rep)
        assert once.orientation() == ("rray", "point1")
        assert build_graph(once).edges == build_graph(rep).edges
        assert flip_chain_rep(once) == rep

    def test_single_edge(self):
        rep = Representation(ClassTag.CHAIN, [Point1(3)], [RightRay(2)])
        assert build_graph(flip_chain_rep(rep)).edges == frozenset({(0, 0)})

    def test_random(self):
        for seed in range(30):
            rep = random_representation("chain", 10, 10, seed)
            assert build_graph(flip_chain_rep(rep)).edges == build_graph(rep).edges

    def test_rejects_other_classes(self):
        with pytest.raises(InvalidInputError):
            flip_chain_rep(Representation(ClassTag.CONV))


class TestChain3:
    def test_single_edge_factors(self):
        rep = Representation(ClassTag.CHAIN3_BRC, [HSegment(1, 2, 3)], [BottomlessRect(0, 4, 5)])
        x_rep, y_rep = chain3_projections(rep)
        assert build_graph(x_rep).edge_count == 1
        assert build_graph(y_rep).edge_count == 1
        assert build_graph(x_rep).intersection(build_graph(y_rep)).edges == build_graph(rep).edges

    def test_containment_failing_in_y_only(self):
        rep = Representation(ClassTag.CHAIN3_BRC, [HSegment(1, 2, 8)], [BottomlessRect(0, 4, 5)])
        x_rep, y_rep = chain3_projections(rep)
        assert build_graph(x_rep).edges == frozenset({(0, 0)})
        assert build_graph(y_rep).edge_count == 0
        assert build_graph(rep).edge_count == 0

    def test_empty(self):
        x_rep, y_rep = chain3_projections(Representation(ClassTag.CHAIN3_BRC))
        assert (x_rep.u_count, x_rep.v_count, y_rep.u_count, y_rep.v_count) == (0, 0, 0, 0)
        assert assemble_chain3(x_rep, y_rep) == Representation(ClassTag.CHAIN3_BRC)

    def test_round_trip(self):
        rng = random.Random(41)
        for _ in range(500):
            rep = random_representation("chain3_brc", rng.randint(0, 25), rng.randint(0, 25), rng.randrange(10**6))
            assembled = assemble_chain3(*chain3_projections(rep))
            assert assembled == rep
            assert build_graph(assembled).edges == build_graph(rep).edges

    def test_flipped_chain_factor(self):
        rep = random_representation("chain3_brc", 12, 12, 4)
        x_rep, y_rep = chain3_projections(rep)
        assembled = assemble_chain3(x_rep, flip_chain_rep(y_rep))
        assert build_graph(assembled).edges == build_graph(rep).edges

    def test_biclique_factors_need_reranking(self):
        x_rep = Representation(ClassTag.INTERVAL_CONTAINMENT, [Interval(1, 2)] * 2, [Interval(0, 3)] * 2)
        y_rep = Representation(ClassTag.CHAIN, [Point1(0)] * 2, [RightRay(-5)] * 2)
        assembled = assemble_chain3(x_rep, y_rep)
        assert validate_representation(assembled) == []
        assert build_graph(assembled).edges == BipartiteGraph.complete(2, 2).edges

    def test_size_mismatch(self):
        x_rep = Representation(ClassTag.INTERVAL_CONTAINMENT, [Interval(1, 2)], [])
        with pytest.raises(InvalidInputError):
            assemble_chain3(x_rep, Representation(ClassTag.CHAIN))


class TestConv2:
    def test_single_point_in_rectangle(self):
        rep = Representation(ClassTag.PRIG, [Point2(1, 1)], [Rect(0, 2, 0, 2)])
        x_factor, y_factor = prig_to_conv2(rep)
        assert build_graph(x_factor.rep).edge_count == 1
        assert build_graph(y_factor.rep).edge_count == 1
        split = conv2_decompose(x_factor, y_factor)
        assert build_graph(split.prig).edge_count == 1
        assert (split.gig.u_count, split.gig.v_count) == (0, 0)

    def test_empty(self):
        x_factor, y_factor = prig_to_conv2(Representation(ClassTag.PRIG))
        assert x_factor.rep.u_count == x_factor.rep.v_count == 0
        assert y_factor.rep.u_count == y_factor.rep.v_count == 0

    def test_mixed_universe(self):
        first = ConvFactor(
            Representation(ClassTag.CONV, [Interval(0, 4), Interval(10, 14)], [Point1(2), Point1(12)]),
            ["r", "h"], ["p", "w"],
        )
        second = ConvFactor(
            Representation(ClassTag.CONV, [Interval(0, 4), Interval(10, 14)], [Point1(1), Point1(12)]),
            ["r", "w"], ["p", "h"],
        )
        split = conv2_decompose(first, second)
        assert split.prig_u_labels == ("p",) and split.prig_v_labels == ("r",)
        assert split.gig_u_labels == ("h",) and split.gig_v_labels == ("w",)
        assert build_graph(split.prig).edge_count == 1
        assert build_graph(split.gig).edge_count == 1
        expected = {frozenset({"r", "p"}), frozenset({"h", "w"})}
        assert conv2_graph(first, second) == expected
        assert split.labeled_edges() == expected

    def test_universe_mismatch(self):
        a = ConvFactor(Representation(ClassTag.CONV, [Interval(0, 1)], [Point1(0)]), ["a"], ["b"])
        c = ConvFactor(Representation(ClassTag.CONV, [Interval(0, 1)], [Point1(0)]), ["a"], ["c"])
        with pytest.raises(InvalidInputError):
            conv2_decompose(a, c)

    @pytest.mark.parametrize("klass, to_conv2", [("prig", prig_to_conv2), ("gig", gig_to_conv2)])
    def test_round_trip(self, klass, to_conv2):
        rng = random.Random(klass)
        for _ in range(500):
            rep = random_representation(klass, rng.randint(0, 20), rng.randint(0, 20), rng.randrange(10**6))
            factors = to_conv2(rep)
            split = conv2_decompose(*factors)
            expected = labeled_edges(rep, *default_labels(rep))
            assert conv2_graph(*factors) == expected
            assert split.labeled_edges() == expected

    def test_prig_round_trip_is_identical(self):
        rep = random_representation("prig", 8, 8, 1)
        split = conv2_decompose(*prig_to_conv2(rep))
        assert split.prig == rep


class TestDyadic:
    def test_cover_examples(self):
        assert dyadic_cover(0, 8) == [DyadicRange(0, 7)]
        assert dyadic_cover(5, 8) == [DyadicRange(5, 5), DyadicRange(6, 7)]
        assert dyadic_cover(1, 8) == [DyadicRange(1, 1), DyadicRange(2, 3), DyadicRange(4, 7)]

    def test_cover_pads_to_power_of_two(self):
        assert dyadic_cover(1, 5) == [DyadicRange(1, 1), DyadicRange(2, 3), DyadicRange(4, 7)]

    def test_cover_bad_input(self):
        with pytest.raises(InvalidInputError):
            dyadic_cover(8, 8)
        with pytest.raises(InvalidInputError):
            DyadicRange(1, 2)

    def test_cover_exhaustive(self):
        for j in range(11):
            n = 2 ** j
            for lo in range(n):
                cover = dyadic_cover(lo, n)
                assert len(cover) <= max(j, 1)
                covered = [r for block in cover for r in range(block.lo, block.hi + 1)]
                assert covered == list(range(lo, n))

    def test_single_edge(self):
        rep = Representation(ClassTag.CHAIN, [Point1(x) for x in range(8)], [RightRay(7)])
        pieces = dyadic_decompose(rep)
        with_edges = [p for p in pieces if p.graph.edge_count]
        assert len(with_edges) == 1
        assert with_edges[0].graph.edges == frozenset({(7, 0)})

    def test_exact_partition(self):
        rep = chain_lower_bound(8, 4, 2)
        g = build_graph(rep)
        pieces = dyadic_decompose(rep, g)
        assert sum(p.graph.edge_count for p in pieces) == g.edge_count == 11
        union = set()
        for p in pieces:
            assert not (union & p.graph.edges)
            union |= p.graph.edges
        assert union == g.edges

    def test_empty_residual(self):
        rep = chain_lower_bound(8, 4, 2)
        pieces = dyadic_decompose(rep, BipartiteGraph(8, 4, frozenset()))
        assert pieces
        assert all(p.graph.edge_count == 0 for p in pieces)

    def test_foreign_residual_edges_are_dropped(self):
        rep = Representation(ClassTag.CHAIN, [Point1(0), Point1(5)], [RightRay(3)])
        residual = BipartiteGraph(2, 1, frozenset({(0, 0), (1, 0)}))
        pieces = dyadic_decompose(rep, residual)
        assert set().union(*(p.graph.edges for p in pieces)) == {(1, 0)}

    def test_multiplicity(self):
        rng = random.Random(8)
        for j in range(1, 11):
            n = 2 ** j
            points = [Point1(rng.randint(0, 4 * n)) for _ in range(n)]
            rays = [RightRay(rng.randint(0, 4 * n)) for _ in range(n)]
            rep = Representation(ClassTag.CHAIN, points, rays)
            pieces = dyadic_decompose(rep)
            assert sum(p.graph.edge_count for p in pieces) == build_graph(rep).edge_count
            ray_count = Counter(r for p in pieces for r in p.ray_members)
            point_count = Counter(q for p in pieces for q in p.point_members)
            assert max(ray_count.values(), default=0) <= j
            assert max(point_count.values(), default=0) <= j + 1

    def test_rays_on_u(self):
        rep = flip_chain_rep(chain_lower_bound(6, 6, 3))
        g = build_graph(rep)
        pieces = dyadic_decompose(rep)
        assert sum(p.graph.edge_count for p in pieces) == g.edge_count


def test_chaind_bound():
    assert chaind_bound(3, 10, 10, 3) == 180
    assert chaind_bound(4, 16, 16, 2) == 576
    assert chaind_bound(5, 7, 9, 1) == 0
    assert chaind_bound(4, 10, 1, 2) == 36
    assert chaind_bound(6, 10, 1, 2) == 36
    with pytest.raises(InvalidInputError):
        chaind_bound(2, 4, 4, 2)
