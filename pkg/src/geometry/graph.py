from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Tuple

from ..utils.errors import InvalidInputError

Edge = Tuple[int, int]
# ("u", i) or ("v", j)
Vertex = Tuple[str, int]


@dataclass(frozen=True)
class BipartiteGraph:
    """G = (U ∪ V, E) with U = range(u_count), V = range(v_count)"""
    u_count: int
    v_count: int
    edges: FrozenSet[Edge]
    _u_adj: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)
    _v_adj: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.u_count < 0 or self.v_count < 0:
            raise InvalidInputError("Partition sizes must be non-negative")
        edges = frozenset(self.edges)
        u_adj = [set() for _ in range(self.u_count)]
        v_adj = [set() for _ in range(self.v_count)]
        for u, v in edges:
            if not (0 <= u < self.u_count and 0 <= v < self.v_count):
                raise InvalidInputError(f"Edge ({u}, {v}) is out of range")
            u_adj[u].add(v)
            v_adj[v].add(u)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_u_adj", tuple(frozenset(s) for s in u_adj))
        object.__setattr__(self, "_v_adj", tuple(frozenset(s) for s in v_adj))

    @classmethod
    def from_edges(cls, u_count: int, v_count: int, edges: Iterable[Edge]) -> "BipartiteGraph":
        return cls(u_count, v_count, frozenset(edges))

    @classmethod
    def from_matrix(cls, rows) -> "BipartiteGraph":
        """Biadjacency matrix: rows are U, columns are V"""
        rows = [list(r) for r in rows]
        v_count = len(rows[0]) if rows else 0
        edges = {(i, j) for i, row in enumerate(rows) for j, bit in enumerate(row) if bit}
        return cls(len(rows), v_count, frozenset(edges))

    @classmethod
    def complete(cls, m: int, n: int) -> "BipartiteGraph":
        return cls(m, n, frozenset((i, j) for i in range(m) for j in range(n)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def u_neighbors(self, u: int) -> FrozenSet[int]:
        return self._u_adj[u]

    def v_neighbors(self, v: int) -> FrozenSet[int]:
        return self._v_adj[v]

    def neighbors(self, vertex: Vertex) -> FrozenSet[int]:
        side, index = vertex
        return self._u_adj[index] if side == "u" else self._v_adj[index]

    def degree(self, vertex: Vertex) -> int:
        return len(self.neighbors(vertex))

    def vertices(self):
        return [("u", i) for i in range(self.u_count)] + [("v", j) for j in range(self.v_count)]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._u_adj[u]

    def matrix(self):
        """Biadjacency matrix as nested lists of 0/1"""
        return [[1 if j in self._u_adj[i] else 0 for j in range(self.v_count)] for i in range(self.u_count)]

    def induced(self, u_keep: Iterable[int], v_keep: Iterable[int]) -> Tuple["BipartiteGraph", list, list]:
        """Induced subgraph with local indices plus the local→global index maps"""
        u_map = sorted(set(u_keep))
        v_map = sorted(set(v_keep))
        v_local = {v: j for j, v in enumerate(v_map)}
        edges = {
            (i, v_local[v])
            for i, u in enumerate(u_map)
            for v in self._u_adj[u]
            if v in v_local
        }
        return BipartiteGraph(len(u_map), len(v_map), frozenset(edges)), u_map, v_map

    def restricted(self, u_keep: Iterable[int], v_keep: Iterable[int]) -> "BipartiteGraph":
        """Same vertex sets, keeping only edges between u_keep and v_keep"""
        u_keep = set(u_keep)
        v_keep = set(v_keep)
        return BipartiteGraph(
            self.u_count,
            self.v_count,
            frozenset((u, v) for u, v in self.edges if u in u_keep and v in v_keep),
        )

    def intersection(self, other: "BipartiteGraph") -> "BipartiteGraph":
        if (self.u_count, self.v_count) != (other.u_count, other.v_count):
            raise InvalidInputError("Graphs have different partition sizes")
        return BipartiteGraph(self.u_count, self.v_count, self.edges & other.edges)
