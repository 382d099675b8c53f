"""
Chordal bipartite certification through gamma-free orderings.
"""

from __future__ import annotations

import itertools
import logging
from typing import Optional, Sequence, Tuple

import networkx as nx

from .bounds import chordal_bound
from .certificate import Biclique, Certificate, WithinBound
from ..geometry.graph import BipartiteGraph
from ..geometry.representation import ClassTag, Representation
from ..oracle.biclique import BicliqueWitness, verify_witness
from ..oracle.matrix import is_gamma_free
from ..oracle.peeling import EliminationCertificate, peel
from ..utils.config import DEFAULT_LIMITS
from ..utils.errors import InternalCertificationError, InvalidInputError, OrderingNotFoundError

logger = logging.getLogger("certify.chordal")

Ordering = Tuple[Tuple[int, ...], Tuple[int, ...]]

# (read vectors back to front, sort descending)
_LEX_VARIANTS = [(True, True), (False, True), (True, False), (False, False)]


def _lex_refine(matrix, rows, cols, backwards, descending):
    """Alternately sort rows and columns lexicographically until both are stable"""
    rows, cols = list(rows), list(cols)
    for _ in range((len(rows) + len(cols)) ** 2 + 8):
        def row_key(r):
            vec = [matrix[r][c] for c in cols]
            return vec[::-1] if backwards else vec

        def col_key(c):
            vec = [matrix[r][c] for r in rows]
            return vec[::-1] if backwards else vec

        new_rows = sorted(rows, key=row_key, reverse=descending)
        new_cols = sorted(cols, key=col_key, reverse=descending)
        if new_rows == rows and new_cols == cols:
            break
        rows, cols = new_rows, new_cols
    return tuple(rows), tuple(cols)


def _column_order_for(g: BipartiteGraph, rows: Sequence[int]):
    """A column order making (rows, cols) gamma-free, or None if none exists for these rows"""
    forced = nx.DiGraph()
    forced.add_nodes_from(range(g.v_count))
    for a, b in itertools.combinations(rows, 2):
        upper, lower = g.u_neighbors(a), g.u_neighbors(b)
        both = upper & lower
        for j in lower - upper:
            for j2 in both:
                # j before j2 would form the pattern
                forced.add_edge(j2, j)
    if not nx.is_directed_acyclic_graph(forced):
        return None
    return tuple(nx.lexicographical_topological_sort(forced))


def _exhaustive(g: BipartiteGraph) -> Optional[Ordering]:
    transpose = g.u_count > g.v_count
    h = BipartiteGraph(g.v_count, g.u_count, frozenset((v, u) for u, v in g.edges)) if transpose else g
    for rows in itertools.permutations(range(h.u_count)):
        cols = _column_order_for(h, rows)
        if cols is not None:
            return (cols, tuple(rows)) if transpose else (tuple(rows), cols)
    return None


def gamma_free_order(g: BipartiteGraph, exhaustive_cap: Optional[int] = None) -> Optional[Ordering]:
    """
    Row and column orders under which g's biadjacency matrix avoids (0 1 / 1 1).

    Tries the natural order, then doubly lexical refinements. For small
    matrices an exhaustive search over the smaller side settles the question,
    returning None when no ordering exists. Larger matrices that defeat the
    refinement raise OrderingNotFoundError.
    """
    cap = DEFAULT_LIMITS.gamma_exhaustive_cap if exhaustive_cap is None else exhaustive_cap
    natural = (tuple(range(g.u_count)), tuple(range(g.v_count)))
    if is_gamma_free(g, *natural) is None:
        return natural

    matrix = g.matrix()
    for backwards, descending in _LEX_VARIANTS:
        rows, cols = _lex_refine(matrix, natural[0], natural[1], backwards, descending)
        if is_gamma_free(g, rows, cols) is None:
            logger.debug(f"Doubly lexical ordering found (backwards={backwards}, descending={descending})")
            return rows, cols

    if min(g.u_count, g.v_count) <= cap:
        logger.debug("Refinement failed, falling back to exhaustive search")
        return _exhaustive(g)

    raise OrderingNotFoundError(
        f"ordering-not-found: refinement failed on a {g.u_count}x{g.v_count} matrix above the exhaustive cap {cap}"
    )



def representation_order(rep: Representation) -> Ordering:
    """
    Gamma-free row and column orders read off a chain, convex or interval
    containment representation.

    Chain rows go by decreasing neighborhood. Convex graphs put points by x and
    intervals by left endpoint. Interval containment puts inner intervals by
    decreasing left endpoint and outer intervals by decreasing right endpoint.
    """
    u, v = rep.u_objects, rep.v_objects

    def by(objects, key):
        return tuple(sorted(range(len(objects)), key=lambda i: (key(objects[i]), i)))

    tag = rep.class_tag
    if tag is ClassTag.CHAIN:
        if rep.orientation()[0] == "point1":
            return by(u, lambda p: -p.x), by(v, lambda r: r.start_x)
        return by(u, lambda r: r.start_x), by(v, lambda p: -p.x)
    if tag is ClassTag.CONV:
        if rep.orientation()[0] == "interval":
            return by(u, lambda iv: iv.lo), by(v, lambda p: p.x)
        return by(u, lambda p: p.x), by(v, lambda iv: iv.lo)
    if tag is ClassTag.INTERVAL_CONTAINMENT:
        return by(u, lambda iv: -iv.lo), by(v, lambda iv: -iv.hi)
    raise InvalidInputError(f"No geometric gamma-free order for class {tag.value}")



def certify_chordal(g: BipartiteGraph, row_order, col_order, k: int) -> Certificate:
    """
    Peel vertices of degree at most k-1; a stuck residual yields a K_{k,k}.

    In the gamma-free residual matrix, let j be the last column and i the last
    row with a 1 in column j. Every row with a 1 in column j is adjacent to
    every column with a 1 in row i.
    """
    if k < 1:
        raise InvalidInputError(f"k must be at least 1, got {k}")
    violation = is_gamma_free(g, row_order, col_order)
    if violation is not None:
        raise InvalidInputError(f"Ordering is not gamma-free: pattern at {violation}")

    bound = chordal_bound(g.u_count, g.v_count, k)
    steps, remaining = peel(g, threshold=k - 1)
    if not remaining:
        return WithinBound(EliminationCertificate(tuple(steps), k - 1), bound)

    live_rows = [u for u in row_order if ("u", u) in remaining]
    live_cols = [v for v in col_order if ("v", v) in remaining]
    last_col = live_cols[-1]
    R = [u for u in live_rows if g.has_edge(u, last_col)]
    i = R[-1]
    C = [v for v in live_cols if g.has_edge(i, v)]
    logger.debug(f"Stuck after {len(steps)} removals; |R|={len(R)}, |C|={len(C)}")

    witness = BicliqueWitness(tuple(R[:k]), tuple(C[:k]))
    if len(R) < k or len(C) < k or not verify_witness(g, witness):
        logger.error(f"Chordal extraction produced an invalid witness {witness}")
        raise InternalCertificationError("chordal extraction failed its self-check")
    return Biclique(witness, bound)
