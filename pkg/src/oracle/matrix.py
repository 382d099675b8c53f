from __future__ import annotations

from typing import Optional, Sequence, Tuple

import numpy as np

from ..geometry.graph import BipartiteGraph
from ..utils.errors import InvalidInputError

# The forbidden ordered 2x2 pattern (0 1 / 1 1)
GAMMA = ((0, 1), (1, 1))


def _check_permutation(order, size, what):
    if sorted(order) != list(range(size)):
        raise InvalidInputError(f"{what} order is not a permutation of range({size})")


def ordered_matrix(g: BipartiteGraph, row_order: Sequence[int], col_order: Sequence[int]) -> np.ndarray:
    full = np.zeros((g.u_count, g.v_count), dtype=np.int8)
    for u, v in g.edges:
        full[u, v] = 1
    return full[np.ix_(list(row_order), list(col_order))] if g.u_count and g.v_count else full


def is_gamma_free(
    g: BipartiteGraph, row_order: Sequence[int], col_order: Sequence[int]
) -> Optional[Tuple[int, int, int, int]]:
    """
    None when the ordered biadjacency matrix avoids (0 1 / 1 1).

    Otherwise the violation (u, v, u2, v2) whose positions are lexicographically
    first; u precedes u2 in row_order and v precedes v2 in col_order, with
    entries (u,v)=0 and (u,v2)=(u2,v)=(u2,v2)=1.
    """
    _check_permutation(row_order, g.u_count, "row")
    _check_permutation(col_order, g.v_count, "column")
    rows, cols = g.u_count, g.v_count
    if rows < 2 or cols < 2:
        return None
    m = ordered_matrix(g, row_order, col_order)

    for i in range(rows - 1):
        row = m[i]
        below = m[i + 1:]
        both = below & row
        has_both = both.any(axis=1)
        # last column where both rows have a 1, or -1
        last_both = np.where(has_both, cols - 1 - np.argmax(both[:, ::-1], axis=1), -1)
        for j in np.flatnonzero(row == 0):
            hits = (below[:, j] == 1) & (last_both > j)
            if hits.any():
                r = int(np.argmax(hits))
                j2 = int(j) + 1 + int(np.argmax(both[r, j + 1:]))
                return (row_order[i], col_order[int(j)], row_order[i + 1 + r], col_order[j2])
    return None
